"""
Coupling decomposition and angular/spin channel classification.

The dimensionless coupling Ma is split as Ma = n + mu with integer n and
mu in [0, 1).  Each channel (k, s) is re-indexed by l = k + s*n and falls
into one of three self-adjointness regions according to (l + s*mu)^2:
  >= 1          essentially self-adjoint, effective order nu = |l + s*mu|
  in (0, 1)     one-parameter extension family, order gamma = ||l| - mu|
  == 0          logarithmic case (only mu = 0, l = 0)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

# mu this close to an integer is snapped; gamma -> 0 or 1 makes the
# Gamma-function ratios in the spectra degenerate.
SNAP_TOL = 1e-14


class Region(Enum):
    ESSENTIALLY_SELF_ADJOINT = "EssentiallySelfAdjoint"
    EXTENSION_FAMILY = "ExtensionFamily"
    LOG_CASE = "LogCase"


@dataclass(frozen=True)
class Coupling:
    """Ma = n + mu with 0 <= mu < 1 (floor convention, also for Ma < 0)."""

    ma: float
    n: int
    mu: float

    def __post_init__(self):
        if not (0.0 <= self.mu < 1.0):
            raise DomainError(f"Coupling: mu={self.mu} outside [0, 1)")
        if abs(self.n + self.mu - self.ma) > 1e-12 * max(1.0, abs(self.ma)):
            raise DomainError("Coupling: ma != n + mu")


@dataclass(frozen=True)
class Channel:
    k: int
    s: int
    l: int
    region: Region
    nu: float | None  # |l + s*mu| for the essentially-self-adjoint region
    gamma: float | None  # ||l| - mu| for the extension family


def decompose(ma: float) -> Coupling:
    """Split Ma into integer and fractional parts, snapping mu near 0/1."""
    if not math.isfinite(ma):
        raise DomainError(f"decompose: non-finite coupling {ma}")
    n = math.floor(ma)
    mu = ma - n
    if mu >= 1.0 - SNAP_TOL:
        n += 1
        mu = 0.0
    elif mu <= SNAP_TOL:
        mu = 0.0
    return Coupling(ma=float(n) + mu, n=n, mu=mu)


def classify(k: int, s: int, coupling: Coupling) -> Channel:
    """Assign the self-adjointness region of channel (k, s)."""
    if s not in (-1, 1):
        raise DomainError(f"classify: s must be +-1, got {s}")
    l = k + s * coupling.n
    t = l + s * coupling.mu
    if t * t >= 1.0:
        return Channel(k=k, s=s, l=l, region=Region.ESSENTIALLY_SELF_ADJOINT,
                       nu=abs(t), gamma=None)
    if t == 0.0:
        # only reachable for mu = 0, l = 0
        return Channel(k=k, s=s, l=l, region=Region.LOG_CASE, nu=None, gamma=None)
    # extension family: l in {0, -s}, gamma = ||l| - mu| = |t|
    return Channel(k=k, s=s, l=l, region=Region.EXTENSION_FAMILY,
                   nu=None, gamma=abs(abs(l) - coupling.mu))


def enumerate_channels(coupling: Coupling, k_min: int, k_max: int) -> list[Channel]:
    """All channels for k in [k_min, k_max], both spins, ordered by (k, s)."""
    if k_min > k_max:
        raise DomainError(f"enumerate_channels: k_min={k_min} > k_max={k_max}")
    return [classify(k, s, coupling)
            for k in range(k_min, k_max + 1) for s in (-1, 1)]
