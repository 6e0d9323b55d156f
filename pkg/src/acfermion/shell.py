"""
Delta-shell regularization: transcendental spectrum, small-R closed form,
an independent Numerov shooting oracle, and the coupling renormalization flow.

The shell potential Ma * delta(r - R)/R joins an interior region with
centrifugal index |l| to an exterior region with non-integer index gamma.
For a bound level E = -X^2/(2 m R^2), X = sqrt(2m|E|) R, matching the radial
solution and its derivative jump across the shell gives

    sqrt(X) [K_g'(X)/K_g(X) - J_{|l|}'(X)/J_{|l|}(X)] - Ma/sqrt(X) = 0,

whose first root below the first zero of J_{|l|} is the ground level.  The
small-X expansion collapses this to the closed form

    E = -(2/(m R^2)) * [ (|l|+Ma-g) Gamma(1-g) / ((|l|+Ma+g) Gamma(1+g)) ]^(-1/g).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from . import specfun as sf
from .channels import decompose
from .errors import (BracketError, DegenerateConfigError, DomainError,
                     NoBoundStateError, NoEigenvalueError, PoleInResidualError)


@dataclass(frozen=True)
class ShellConfig:
    R: float
    ma: float
    m: float
    l: int
    gamma: float

    def __post_init__(self):
        if not (self.R > 0):
            raise DomainError(f"ShellConfig: R must be > 0, got {self.R}")
        if not (self.m > 0):
            raise DomainError(f"ShellConfig: m must be > 0, got {self.m}")
        if not (0.0 < self.gamma < 1.0):
            raise DomainError(
                f"ShellConfig: gamma must lie in (0,1), got {self.gamma}")


def first_bessel_zero(order: int) -> float:
    """First positive zero of J_|order| by scan + bisection."""
    nu = abs(order)
    x = max(0.5, 0.5 * nu)
    f_prev = sf.bessel_j(nu, x)
    while x < 60.0:
        x_next = x + 0.1
        f = sf.bessel_j(nu, x_next)
        if f_prev * f <= 0.0:
            return brentq(lambda t: sf.bessel_j(nu, t), x, x_next,
                          xtol=1e-14, rtol=8.9e-16)
        x, f_prev = x_next, f
    raise BracketError(f"first_bessel_zero: no zero located for order {order}")


def matching_residual(X: float, cfg: ShellConfig) -> float:
    """LHS - RHS of the shell matching condition at X = sqrt(2m|E|) R.

    Bessel derivatives use the analytic identities
    K' = -(K_{g-1} + K_{g+1})/2 and J' = (J_{nu-1} - J_{nu+1})/2.
    """
    if not (X > 0):
        raise DomainError(f"matching_residual: X must be > 0, got {X}")
    nu = float(abs(cfg.l))
    j = sf.bessel_j(nu, X)
    k = sf.bessel_k(cfg.gamma, X)
    if abs(j) < 1e-280 or abs(k) < 1e-280:
        raise PoleInResidualError(
            f"matching_residual: J or K vanishes at X={X}")
    jp = sf.bessel_j_deriv(nu, X)
    kp = sf.bessel_k_deriv(cfg.gamma, X)
    sx = math.sqrt(X)
    return sx * (kp / k - jp / j) - cfg.ma / sx


def closed_form_bracket(cfg: ShellConfig) -> float:
    """The (|l|+Ma-g) Gamma(1-g) / ((|l|+Ma+g) Gamma(1+g)) factor."""
    al = abs(cfg.l)
    num = al + cfg.ma - cfg.gamma
    den = al + cfg.ma + cfg.gamma
    if abs(num) < 1e-14 or abs(den) < 1e-14:
        raise DegenerateConfigError(
            f"closed_form_bracket: degenerate configuration "
            f"(|l|+Ma-+gamma within 1e-14 of zero: num={num}, den={den})")
    return (num / den) * sf.gamma(1.0 - cfg.gamma) / sf.gamma(1.0 + cfg.gamma)


def shell_bound_energy_closed(cfg: ShellConfig) -> float:
    """Small-R closed form; valid as an approximation only for m R << 1."""
    br = closed_form_bracket(cfg)
    if br <= 0:
        raise NoBoundStateError(
            f"shell_bound_energy_closed: bracket {br} <= 0, no closed-form level")
    return -(2.0 / (cfg.m * cfg.R ** 2)) * br ** (-1.0 / cfg.gamma)


def _scan_first_root(cfg: ShellConfig) -> float:
    """First genuine sign change of the residual below the first J_|l| zero."""
    x_max = first_bessel_zero(cfg.l) - 1e-6
    # geometric grid resolves near-threshold roots (X can be ~1e-6 and below)
    n = 600
    ratio = (x_max / 1e-9) ** (1.0 / (n - 1))
    x_prev = 1e-9
    f_prev = matching_residual(x_prev, cfg)
    for i in range(1, n):
        x = 1e-9 * ratio ** i
        f = matching_residual(x, cfg)
        if f_prev == 0.0:
            return x_prev
        if f_prev * f < 0.0:
            return brentq(lambda t: matching_residual(t, cfg), x_prev, x,
                          xtol=1e-300, rtol=8.9e-16)
        x_prev, f_prev = x, f
    raise BracketError(
        f"shell_bound_energy_exact: no sign change of the matching residual "
        f"on (0, {x_max:.6g}) for {cfg}")


def shell_bound_energy_exact(cfg: ShellConfig) -> float:
    """Ground level from the full transcendental matching condition."""
    x_root = _scan_first_root(cfg)
    return -x_root ** 2 / (2.0 * cfg.m * cfg.R ** 2)


# ---------------------------------------------------------------------------
# Numerov shooting oracle
# ---------------------------------------------------------------------------


def _numerov_sweep(f0: float, f1: float, g, r0: float, h: float, n: int):
    """Integrate F'' = g(r) F by the Numerov recurrence; returns last 5 values."""
    h2_12 = h * h / 12.0
    tail = [0.0] * 5
    fm, fc = f0, f1
    gm = g(r0)
    gc = g(r0 + h)
    tail[3], tail[4] = fm, fc
    for i in range(2, n):
        r_next = r0 + i * h
        gn = g(r_next)
        fn = (2.0 * fc * (1.0 + 5.0 * h2_12 * gc) - fm * (1.0 - h2_12 * gm)) \
            / (1.0 - h2_12 * gn)
        fm, fc = fc, fn
        gm, gc = gc, gn
        tail = tail[1:] + [fn]
        if abs(fc) > 1e250:
            # rescale freely; only log-derivatives at the endpoint matter
            fm *= 1e-250
            fc *= 1e-250
            tail = [t * 1e-250 for t in tail]
    return tail


def _endpoint_deriv(tail, h: float) -> float:
    """One-sided 4th-order derivative at the last grid point."""
    f4, f3, f2, f1, f0 = tail  # f0 is the endpoint
    return (25.0 * f0 - 48.0 * f1 + 36.0 * f2 - 16.0 * f3 + 3.0 * f4) / (12.0 * h)


def _matching_defect(E: float, cfg: ShellConfig, n_grid: int) -> float:
    """R * (F'_in/F_in - F'_out/F_out)(R) - Ma for trial energy E < 0.

    Integrated on a log grid: with t = ln r and F = sqrt(r) u(t) the radial
    equation becomes u'' = [c^2 - 2mE e^{2t}] u (c = |l| inside, gamma
    outside), which a uniform-t Numerov sweep resolves across the full
    1/r^2-dominated range.  In these variables the defect is simply
    (u'_in/u_in - u'_out/u_out)(ln R) - Ma.
    """
    m, R, ma = cfg.m, cfg.R, cfg.ma
    al = abs(cfg.l)
    kappa = math.sqrt(-2.0 * m * E)
    two_me = 2.0 * m * E
    t_shell = math.log(R)

    # outward from r = 1e-6 R: regular start u = r^l (1 + c1 r^2 + c2 r^4)
    alpha = al + 0.5
    c1 = -two_me / (4.0 * alpha + 2.0)
    c2 = -two_me * c1 / (8.0 * alpha + 12.0)

    def u_series(t):
        r = math.exp(t)
        return r ** al * (1.0 + c1 * r * r + c2 * r ** 4)

    t_a = t_shell + math.log(1e-6)
    h_out = (t_shell - t_a) / (n_grid - 1)

    def g_in(t):
        return al * al - two_me * math.exp(2.0 * t)

    tail_out = _numerov_sweep(u_series(t_a), u_series(t_a + h_out),
                              g_in, t_a, h_out, n_grid)
    u_out = tail_out[-1]
    up_out = _endpoint_deriv(tail_out, h_out)

    # inward from r_inf: decaying start u = e^{-kr}(1 + (4g^2-1)/(8kr)) / ...
    r_inf = max(30.0 / kappa, 3.0 * R)
    t_inf = math.log(r_inf)
    h_in = (t_inf - t_shell) / (n_grid - 1)
    gam2 = cfg.gamma * cfg.gamma

    def u_asym(t):
        r = math.exp(t)
        return math.exp(-kappa * (r - r_inf)) * (1.0 + (4.0 * gam2 - 1.0)
                                                 / (8.0 * kappa * r))

    def g_ex_rev(t_rev):
        # mirrored coordinate: physical t = 2 t_inf - t_rev
        t = 2.0 * t_inf - t_rev
        return gam2 - two_me * math.exp(2.0 * t)

    tail_in = _numerov_sweep(u_asym(t_inf), u_asym(t_inf - h_in),
                             g_ex_rev, t_inf, h_in, n_grid)
    u_in = tail_in[-1]
    up_in = -_endpoint_deriv(tail_in, h_in)

    if u_out == 0.0 or u_in == 0.0:
        raise NoEigenvalueError("matching defect: wavefunction node at the shell")
    return up_in / u_in - up_out / u_out - ma


def numerov_bound_energy(cfg: ShellConfig) -> float:
    """Independent ODE oracle: shoot outward/inward and match the jump.

    The trial energy is swept over X = sqrt(2m|E|) R below the first interior
    oscillation; the defect's sign change is bisected, then the grid is halved
    until the eigenvalue moves by < 1e-6 relative.
    """
    x_lo, x_hi = 1e-3, 6.0
    n_scan = 80

    def e_of(x: float) -> float:
        return -x * x / (2.0 * cfg.m * cfg.R ** 2)

    def defect(x: float, n_grid: int) -> float:
        return _matching_defect(e_of(x), cfg, n_grid)

    def find_bracket(n_grid: int):
        ratio = (x_hi / x_lo) ** (1.0 / (n_scan - 1))
        x_prev = x_lo
        d_prev = defect(x_prev, n_grid)
        for i in range(1, n_scan):
            x = x_lo * ratio ** i
            d = defect(x, n_grid)
            if d_prev * d < 0.0:
                return x_prev, x
            x_prev, d_prev = x, d
        raise NoEigenvalueError(
            f"numerov_bound_energy: no defect sign change for {cfg} "
            f"(X scanned over [{x_lo}, {x_hi}])")

    n_grid = 1500
    a, b = find_bracket(n_grid)
    x_root = brentq(lambda t: defect(t, n_grid), a, b, xtol=1e-14, rtol=1e-12)
    e_prev = e_of(x_root)
    for _ in range(4):
        n_grid *= 2
        # the root moves only slightly under grid halving; re-bracket locally
        a, b = 0.8 * x_root, min(1.25 * x_root, x_hi)
        da, db = defect(a, n_grid), defect(b, n_grid)
        if da * db > 0.0:
            a, b = find_bracket(n_grid)
        x_root = brentq(lambda t: defect(t, n_grid), a, b,
                        xtol=1e-14, rtol=1e-12)
        e_next = e_of(x_root)
        if abs(e_next - e_prev) < 1e-6 * abs(e_next):
            return e_next
        e_prev = e_next
    return e_prev


# ---------------------------------------------------------------------------
# Shell -> extension-parameter dictionary and the renormalization flow
# ---------------------------------------------------------------------------


def effective_extension_parameter(cfg: ShellConfig, E_ref: float) -> dict:
    """theta (per spin s) induced by the shell at low scattering energy.

    For each s, the exterior scattering solution is expanded over J_{+mu} and
    J_{-mu}; matching value and derivative jump (strength s*Ma) against the
    regular interior solution J_{|n|} fixes the mixture N-/N+, which maps to

        xi = (N-/N+) * Gamma(1+mu)/Gamma(1-mu) * (p/(2m))^(-2 mu)

    via the small-r boundary form, and theta = 2 arctan(xi) in (-pi, pi].
    As R -> 0: theta -> 0 for s=+1 and theta -> +-pi for s=-1.
    """
    if not (E_ref > 0):
        raise DomainError("effective_extension_parameter: requires E_ref > 0")
    coup = decompose(cfg.ma)
    mu = coup.mu
    if mu == 0.0:
        raise DomainError(
            "effective_extension_parameter: integer coupling has no "
            "extension family (mu = 0)")
    a = float(abs(coup.n))
    p = math.sqrt(2.0 * cfg.m * E_ref)
    z = p * cfg.R
    out = {}
    for s in (1, -1):
        jp_ = sf.bessel_j(mu, z)
        jm_ = sf.bessel_j(-mu, z)
        jpp = sf.bessel_j_deriv(mu, z)
        # J'_{-mu} without leaving the order range: J'_v = (v/z) J_v - J_{v+1}
        jmp = (-mu / z) * jm_ - sf.bessel_j(1.0 - mu, z)
        ja = sf.bessel_j(a, z)
        jap = sf.bessel_j_deriv(a, z)
        det = jp_ * z * jmp - jm_ * z * jpp
        if abs(det) < 1e-280:
            raise NoEigenvalueError(
                "effective_extension_parameter: singular continuity system")
        rhs1 = ja
        rhs2 = z * jap + s * cfg.ma * ja
        n_plus = (rhs1 * z * jmp - jm_ * rhs2) / det
        n_minus = (jp_ * rhs2 - rhs1 * z * jpp) / det
        xi = (n_minus / n_plus) * (sf.gamma(1.0 + mu) / sf.gamma(1.0 - mu)) \
            * (p / (2.0 * cfg.m)) ** (-2.0 * mu)
        out[s] = 2.0 * math.atan(xi)
    return out


def renormalize_coupling(E_target: float, R: float, l: int, m: float,
                         gamma: float) -> float:
    """Ma(R) holding the shell ground level at E_target (dimensional
    transmutation flow).

    The matching condition is linear in Ma at fixed X, so the flow is solved
    directly: Ma = X [K'/K - J'/J](X) evaluated at X = sqrt(2m|E_target|) R.
    The result is verified against the transcendental root before returning.
    """
    if not (E_target < 0):
        raise DomainError("renormalize_coupling: requires E_target < 0")
    x_t = math.sqrt(-2.0 * m * E_target) * R
    nu = float(abs(l))
    j = sf.bessel_j(nu, x_t)
    k = sf.bessel_k(gamma, x_t)
    if abs(j) < 1e-280:
        raise NoEigenvalueError(
            "renormalize_coupling: target X sits on a zero of J_|l|")
    ma = x_t * (sf.bessel_k_deriv(gamma, x_t) / k
                - sf.bessel_j_deriv(nu, x_t) / j)
    cfg = ShellConfig(R=R, ma=ma, m=m, l=l, gamma=gamma)
    e_check = shell_bound_energy_exact(cfg)
    if abs(e_check - E_target) > 1e-8 * abs(E_target):
        raise NoEigenvalueError(
            f"renormalize_coupling: verification failed "
            f"(E={e_check}, target={E_target})")
    return ma


def attraction_window(l: int, gamma: float, ma: float) -> bool:
    """True iff the shell supports binding in the stated parameter window."""
    if ma >= 0:
        return False
    if l == 0:
        return 0.0 < gamma < 0.5
    if abs(l) == 1:
        return 0.5 < gamma < 1.0
    return False
