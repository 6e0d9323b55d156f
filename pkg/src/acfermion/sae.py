"""
Bound and continuum states of the one-parameter self-adjoint extension family.

For a channel of non-integer effective order gamma in (0, 1) the extension is
labelled by xi (equivalently theta with xi = tan(theta/2)).  The coefficient
multiplying the ingoing cylindrical wave,

    B(E) = 1 + xi * (Gamma(1-gamma)/Gamma(1+gamma)) * (-E/2m)^gamma,

is real on the physical sheet E < 0; its unique zero (existing iff xi < 0) is
the bound-state energy, also available in closed form.  The l + s*mu = 0
channel ("log case") carries one level E0 = -4m exp(2(xi - C)) for any finite
xi, where C is the Euler constant.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass

from scipy.integrate import quad
from scipy.optimize import brentq

from . import specfun as sf
from .channels import Channel, Coupling, Region, enumerate_channels
from .errors import BracketError, DomainError, NoBoundStateError

EULER_GAMMA = sf.EULER_GAMMA


@dataclass(frozen=True)
class ExtensionParameter:
    """xi in [-inf, inf] and theta in [0, 2pi) with xi = tan(theta/2).

    theta = 0 corresponds to xi = 0 (pure regular r^{1/2+gamma} behavior) and
    theta = pi to xi = +-inf (pure irregular r^{1/2-gamma} behavior).
    """

    xi: float
    theta: float

    @classmethod
    def from_xi(cls, xi: float) -> "ExtensionParameter":
        if math.isnan(xi):
            raise DomainError("ExtensionParameter: xi is NaN")
        if math.isinf(xi):
            return cls(xi=xi, theta=math.pi)
        theta = 2.0 * math.atan(xi)
        if theta < 0.0:
            theta += 2.0 * math.pi
        return cls(xi=xi, theta=theta)

    @classmethod
    def from_theta(cls, theta: float) -> "ExtensionParameter":
        if not (0.0 <= theta <= 2.0 * math.pi):
            raise DomainError(f"ExtensionParameter: theta={theta} outside [0, 2pi]")
        t = theta % (2.0 * math.pi)
        if abs(t - math.pi) < 1e-300:
            return cls(xi=math.inf, theta=math.pi)
        return cls(xi=math.tan(0.5 * t), theta=t)


@dataclass(frozen=True)
class BoundState:
    energy: float
    kappa: float
    gamma: float | None  # None marks the log case
    norm_const: float
    channel: Channel | None = None

    def __post_init__(self):
        if not (self.energy < 0):
            raise DomainError("BoundState: energy must be negative")


def _check_gamma(gamma: float):
    if not (0.0 < gamma < 1.0):
        raise DomainError(f"gamma must lie in (0,1), got {gamma}")


def gamma_ratio(gamma: float) -> float:
    """Gamma(1-gamma) / Gamma(1+gamma)."""
    _check_gamma(gamma)
    return sf.gamma(1.0 - gamma) / sf.gamma(1.0 + gamma)


def ingoing_coefficient(E: float, xi: float, gamma: float, m: float) -> float:
    """B(E) for E < 0 on the physical sheet."""
    _check_gamma(gamma)
    if not (E < 0):
        raise DomainError(f"ingoing_coefficient: requires E < 0, got {E}")
    if not (m > 0):
        raise DomainError(f"ingoing_coefficient: requires m > 0, got {m}")
    return 1.0 + xi * gamma_ratio(gamma) * (-E / (2.0 * m)) ** gamma


def bound_energy_closed(gamma: float, xi: float, m: float) -> float:
    """Zero of the ingoing coefficient in closed form; requires xi < 0."""
    _check_gamma(gamma)
    if not (m > 0):
        raise DomainError(f"bound_energy_closed: requires m > 0, got {m}")
    if not (xi < 0):
        raise NoBoundStateError(
            f"no bound state for xi = {xi} >= 0 (requires xi < 0)")
    return -2.0 * m * (-xi * gamma_ratio(gamma)) ** (-1.0 / gamma)


def bound_energy_log(xi: float, m: float) -> float:
    """Single level of the log-case channel, E0 = -4m exp(2(xi - C)).

    Defined for any finite xi; callers that follow the xi < 0 reading of the
    extension family should treat xi >= 0 output as flagged (see
    log_case_flag).
    """
    if not (m > 0):
        raise DomainError(f"bound_energy_log: requires m > 0, got {m}")
    if not math.isfinite(xi):
        raise DomainError("bound_energy_log: xi must be finite")
    return -4.0 * m * math.exp(2.0 * (xi - EULER_GAMMA))


def log_case_flag(xi: float) -> bool:
    """True when the log-case level is outside the xi < 0 existence reading."""
    return xi >= 0


def find_pole(xi: float, gamma: float, m: float) -> float:
    """Root of B(E) on E < 0, bracketed on a log-energy grid and refined.

    B is monotone in (-E)^gamma, so the root is unique for xi < 0.
    """
    _check_gamma(gamma)
    if not (m > 0):
        raise DomainError(f"find_pole: requires m > 0, got {m}")
    if not (xi < 0):
        raise BracketError(f"find_pole: no sign change possible for xi = {xi} >= 0")
    n_scan = 1201
    lo, hi = -60.0, 60.0
    step = (hi - lo) / (n_scan - 1)
    f_prev = ingoing_coefficient(-math.exp(lo), xi, gamma, m)
    u_prev = lo
    for i in range(1, n_scan):
        u = lo + i * step
        f = ingoing_coefficient(-math.exp(u), xi, gamma, m)
        if f_prev == 0.0:
            return -math.exp(u_prev)
        if f_prev * f < 0.0:
            u_root = brentq(
                lambda uu: ingoing_coefficient(-math.exp(uu), xi, gamma, m),
                u_prev, u, xtol=1e-14, rtol=8.9e-16)
            return -math.exp(u_root)
        f_prev, u_prev = f, u
    raise BracketError(
        f"find_pole: no sign change of B(E) on the scan grid "
        f"(xi={xi}, gamma={gamma}, m={m})")


def _kappa_profile_integral(gamma: float | None) -> float:
    """I = int_0^inf x K_g(x)^2 dx by adaptive quadrature (g=0 for log case)."""
    g = 0.0 if gamma is None else gamma
    val, err = quad(lambda x: x * sf.bessel_k(g, x) ** 2, 0.0, 60.0,
                    limit=200, epsabs=1e-14, epsrel=1e-13)
    return val


def printed_norm_const(energy: float, m: float, gamma: float) -> float:
    """The closed-form normalization candidate sqrt(-2mE sin(pi g)/(pi g))."""
    return math.sqrt(-2.0 * m * energy * math.sin(math.pi * gamma)
                     / (math.pi * gamma))


def bound_state(gamma: float | None, xi: float, m: float,
                channel: Channel | None = None) -> BoundState:
    """Bound state of an extension-family (or log-case, gamma=None) channel.

    The normalization constant is fixed numerically so int |F|^2 dr = 1.
    """
    if gamma is None:
        energy = bound_energy_log(xi, m)
    else:
        energy = bound_energy_closed(gamma, xi, m)
    kappa = math.sqrt(-2.0 * m * energy)
    profile = _kappa_profile_integral(gamma)
    # F = N sqrt(r) K_g(kappa r): int F^2 dr = N^2/kappa^2 * int x K^2 dx
    norm_const = kappa / math.sqrt(profile)
    return BoundState(energy=energy, kappa=kappa, gamma=gamma,
                      norm_const=norm_const, channel=channel)


def bound_wavefunction(bs: BoundState, r: float) -> float:
    """F(r) = norm_const * sqrt(r) * K_gamma(kappa r) (K_0 in the log case)."""
    if not (r > 0):
        raise DomainError("bound_wavefunction: requires r > 0")
    g = 0.0 if bs.gamma is None else bs.gamma
    return bs.norm_const * math.sqrt(r) * sf.bessel_k(g, bs.kappa * r)


def continuum_wavefunction(ch: Channel, xi: float, E: float, r: float,
                           m: float = 1.0) -> complex:
    """Radial continuum eigenfunction at energy E > 0 (unnormalized).

    Essentially self-adjoint region: sqrt(r) J_nu(pr).
    Extension family: sqrt(r) [J_g(pr) + xi * ratio * (-E/2m)^g * J_{-g}(pr)]
    with the principal branch (-E/2m)^g = e^{i pi g} (E/2m)^g for E > 0.
    Log case: the J0/N0 mixture whose r->0 form is sqrt(r)[ln(m r) + xi].
    """
    if not (E > 0):
        raise DomainError("continuum_wavefunction: requires E > 0")
    if not (r > 0):
        raise DomainError("continuum_wavefunction: requires r > 0")
    p = math.sqrt(2.0 * m * E)
    sr = math.sqrt(r)
    if ch.region is Region.ESSENTIALLY_SELF_ADJOINT:
        return complex(sr * sf.bessel_j(ch.nu, p * r))
    if ch.region is Region.EXTENSION_FAMILY:
        g = ch.gamma
        lam = xi * gamma_ratio(g) * cmath.exp(1j * math.pi * g) * (E / (2.0 * m)) ** g
        return sr * (sf.bessel_j(g, p * r) + lam * sf.bessel_j(-g, p * r))
    # log case: [xi - C - ln(p/2m)] J0 + (pi/2) N0  ->  sqrt(r)[ln(mr) + xi]
    coeff = xi - EULER_GAMMA - math.log(p / (2.0 * m))
    return complex(sr * (coeff * sf.bessel_j(0.0, p * r)
                         + 0.5 * math.pi * sf.bessel_n(0.0, p * r)))


@dataclass(frozen=True)
class SpectrumReport:
    coupling: Coupling
    xi: float
    channels: tuple[Channel, ...]
    bound_states: dict
    e_zero: float | None  # level of the l=0 channels (gamma = mu)
    e_one: float | None  # level of the |l|=1 channels (gamma = 1-mu)


def spectrum_report(coupling: Coupling, xi: float,
                    k_min: int, k_max: int, m: float = 1.0) -> SpectrumReport:
    """Channels plus attached bound states for every singular channel.

    Bound states exist (and are attached) only for xi < 0.  The l=0 level is
    doubly degenerate across s = +-1; the |l|=1 level at fractional part mu
    equals the l=0 level at fractional part 1-mu.
    """
    chans = enumerate_channels(coupling, k_min, k_max)
    bound: dict = {}
    e_zero = e_one = None
    if xi < 0:
        for ch in chans:
            if ch.region is Region.EXTENSION_FAMILY:
                bs = bound_state(ch.gamma, xi, m, channel=ch)
                bound[(ch.k, ch.s)] = bs
                if ch.l == 0:
                    e_zero = bs.energy
                else:
                    e_one = bs.energy
            elif ch.region is Region.LOG_CASE:
                bound[(ch.k, ch.s)] = bound_state(None, xi, m, channel=ch)
    return SpectrumReport(coupling=coupling, xi=xi, channels=tuple(chans),
                          bound_states=bound, e_zero=e_zero, e_one=e_one)
