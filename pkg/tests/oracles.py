"""
Independent high-precision oracles (mpmath, 50 digits).

These deliberately avoid the library's algorithms: ascending series for J,
the harmonic-number limit series for Y_0, direct quadrature of the integral
representation for K, and mpmath's Gamma for cross-checks.  Values frozen
into the tests were produced by these routines.
"""

import mpmath as mp

mp.mp.dps = 50


def gamma_oracle(x):
    """Gamma via recursion down to a 50-digit evaluation in [1, 2)."""
    x = mp.mpf(x)
    shift = mp.mpf(1)
    while x > 2:
        x -= 1
        shift *= x
    while x < 1:
        shift /= x
        x += 1
    return shift * mp.gamma(x)


def bessel_j_series(nu, x, terms=300):
    """Ascending series, 50-digit arithmetic."""
    nu, x = mp.mpf(nu), mp.mpf(x)
    s = mp.mpf(0)
    for k in range(terms):
        s += (-1) ** k * (x / 2) ** (nu + 2 * k) \
            / (mp.factorial(k) * mp.gamma(nu + k + 1))
    return s


def bessel_y0_series(x, terms=120):
    """Limit series for Y_0 with harmonic numbers (digamma values)."""
    x = mp.mpf(x)
    s = mp.mpf(0)
    h = mp.mpf(0)
    for k in range(1, terms):
        h += mp.mpf(1) / k
        s += (-1) ** (k + 1) * h * (x ** 2 / 4) ** k / mp.factorial(k) ** 2
    j0 = bessel_j_series(0, x)
    return (2 / mp.pi) * ((mp.log(x / 2) + mp.euler) * j0 + s)


def bessel_k_quadrature(nu, x):
    """K from the integral representation by adaptive quadrature."""
    nu, x = mp.mpf(nu), mp.mpf(x)
    return mp.quad(lambda t: mp.e ** (-x * mp.cosh(t)) * mp.cosh(nu * t),
                   [0, 40])
