"""Exception hierarchy shared by every module of the package."""


class PTDiracError(Exception):
    """Base class for all package errors."""


class NonConvergent(PTDiracError):
    """A series or iteration hit its term/iteration cap."""


class SeriesDomainError(PTDiracError, ValueError):
    """Non-terminating hypergeometric series requested outside |z| < 1."""


class PoleAtC(PTDiracError):
    """The lower parameter c of 2F1 hits a pole before the series terminates."""


class DeformedOverflow(PTDiracError, OverflowError):
    """Exponential overflow inside a deformed hyperbolic function."""


class InvalidKappa(PTDiracError, ValueError):
    """The spin-orbit quantum number kappa must be a nonzero integer."""


class InvalidParams(PTDiracError, ValueError):
    """Potential parameters violate their invariants."""


class PoleAtOrigin(PTDiracError, ValueError):
    """Radial evaluation at r <= 0."""


class PoleOnContour(PTDiracError):
    """A denominator vanishes on the shifted contour x - i x0."""


class ComplexBranch(PTDiracError):
    """A square-root radicand is negative where a real branch is required."""

    def __init__(self, message, radicand=None):
        super().__init__(message)
        self.radicand = radicand


class DivergentLimit(PTDiracError):
    """The spinor coupling denominator M + E - C (or M - E + C) vanishes."""


class ExponentSingular(PTDiracError):
    """Exponent equal to 1/4 makes the 1/(1 - 4 lambda) prefactor singular."""


class NoRootFound(PTDiracError):
    """The energy scan found no sign change of the residual."""


class NotConverged(PTDiracError):
    """The oracle's outer fixed-point iteration did not converge."""


class NoEigenvalue(PTDiracError):
    """Fewer bound eigenvalues than the requested radial quantum number."""


class GridTooCoarse(PTDiracError):
    """The finite-difference grid under-resolves the eigenfunction."""
