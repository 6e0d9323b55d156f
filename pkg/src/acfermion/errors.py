"""
Exception hierarchy shared by the library.

DomainError covers bad inputs (maps to CLI exit code 2),
NumericalError covers solver failures (maps to CLI exit code 1).
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class GammaPoleError(DomainError):
    """Gamma function evaluated at a non-positive integer."""


class NoBoundStateError(DomainError):
    """Parameter choice admits no bound state (e.g. xi >= 0)."""


class DegenerateConfigError(DomainError):
    """Configuration makes a closed-form expression 0/0-degenerate."""


class ForwardDirectionError(DomainError):
    """Scattering amplitude requested in the forward direction phi = 0 mod 2pi."""


class NumericalError(RuntimeError):
    """A numerical procedure failed to converge or to find a root."""


class BracketError(NumericalError):
    """Root bracketing scan found no sign change."""


class NoEigenvalueError(NumericalError):
    """Shooting solver found no eigenvalue in the search window."""


class PoleInResidualError(NumericalError):
    """Matching residual evaluated at a pole (zero of J or K in a denominator)."""
