"""Potential records, quantum numbers and the potential evaluators.

Units follow hbar = c = 1 with lengths in fm and masses/energies in fm^-1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidKappa, InvalidParams, PoleAtOrigin, PoleOnContour
from .specfun import deformation, deformed_cosh, deformed_sinh

#: Constant of the centrifugal approximation.
D0 = 1.0 / 12.0

POLE_GUARD = 1e-14

_ORBITAL_LETTERS = "spdfghiklmnoqrtuvwxyz"


class Symmetry(enum.Enum):
    SPIN = "spin"
    PSPIN = "pspin"


@dataclass(frozen=True)
class PotentialParams:
    """Five-parameter complex Poschl-Teller potential.

    ``alpha`` is the inverse range (fm^-1), ``A`` and ``B`` the dimensionless
    well and barrier parameters, ``M`` the mass (fm^-1) and ``x0`` the
    imaginary coordinate shift (fm).

    Construction only enforces what every evaluator needs (alpha > 0, M > 0,
    0 <= alpha*x0 < pi/2). The physical conditions A > alpha, B > alpha are
    checked by :meth:`require_physical`, because the symmetry checks of the
    potential deliberately evaluate mirrored parameter sets.
    """

    alpha: float
    A: float
    B: float
    M: float
    x0: float = 0.1

    def __post_init__(self):
        for name in ("alpha", "A", "B", "M", "x0"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParams(f"{name} must be finite")
        if self.alpha <= 0:
            raise InvalidParams("alpha must be positive")
        if self.M <= 0:
            raise InvalidParams("M must be positive")
        if not 0 <= self.alpha * self.x0 < math.pi / 2:
            raise InvalidParams("alpha*x0 must lie in [0, pi/2)")

    def require_physical(self) -> "PotentialParams":
        if not self.A > self.alpha:
            raise InvalidParams("A must exceed alpha")
        if not self.B > self.alpha:
            raise InvalidParams("B must exceed alpha")
        if not self.alpha * self.x0 > 0:
            raise InvalidParams("alpha*x0 must be positive")
        return self

    @property
    def well(self) -> float:
        """A(A + alpha), strength of the 1/cosh^2 well."""
        return self.A * (self.A + self.alpha)

    @property
    def barrier(self) -> float:
        """B(B - alpha), strength of the 1/sinh^2 barrier."""
        return self.B * (self.B - self.alpha)

    @property
    def q_c(self) -> complex:
        return deformation(self.alpha, self.x0)

    def replace(self, **changes) -> "PotentialParams":
        fields = dict(alpha=self.alpha, A=self.A, B=self.B, M=self.M, x0=self.x0)
        fields.update(changes)
        return PotentialParams(**fields)


@dataclass(frozen=True)
class SymmetryChoice:
    kind: Symmetry
    constant: float

    def __post_init__(self):
        if not math.isfinite(self.constant):
            raise InvalidParams("symmetry constant must be finite")


@dataclass(frozen=True)
class AltPTParams:
    """(lambda, k) parametrization k(k-1)/sinh^2 - lambda(lambda+1)/cosh^2."""

    lambda_alt: float
    k_alt: float

    def __post_init__(self):
        if not (self.lambda_alt > 1 and self.k_alt > 1):
            raise InvalidParams("lambda_alt and k_alt must both exceed 1")

    @property
    def well(self) -> float:
        return self.lambda_alt * (self.lambda_alt + 1)

    @property
    def barrier(self) -> float:
        return self.k_alt * (self.k_alt - 1)


def _check_kappa(kappa) -> int:
    if isinstance(kappa, bool) or int(kappa) != kappa or kappa == 0:
        raise InvalidKappa("kappa must be nonzero")
    return int(kappa)


def l_from_kappa(kappa: int, symmetry: Symmetry | SymmetryChoice) -> int:
    """Orbital (spin) or pseudo-orbital (p-spin) quantum number for kappa."""
    kappa = _check_kappa(kappa)
    kind = symmetry.kind if isinstance(symmetry, SymmetryChoice) else Symmetry(symmetry)
    if kind is Symmetry.SPIN:
        return -kappa - 1 if kappa < 0 else kappa
    return -kappa if kappa < 0 else kappa - 1


def spin_partner(kappa: int) -> int:
    """kappa' with kappa'(kappa'+1) = kappa(kappa+1); kappa = -1 is a singlet."""
    partner = -_check_kappa(kappa) - 1
    if partner == 0:
        raise InvalidKappa("kappa = -1 has no spin partner")
    return partner


def pspin_partner(kappa: int) -> int:
    """kappa' with kappa'(kappa'-1) = kappa(kappa-1); kappa = 1 is a singlet."""
    partner = -_check_kappa(kappa) + 1
    if partner == 0:
        raise InvalidKappa("kappa = 1 has no p-spin partner")
    return partner


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    kappa: int

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise InvalidParams("n must be a nonnegative integer")
        _check_kappa(self.kappa)

    @property
    def l(self) -> int:
        return l_from_kappa(self.kappa, Symmetry.SPIN)

    @property
    def l_tilde(self) -> int:
        return l_from_kappa(self.kappa, Symmetry.PSPIN)

    @property
    def j(self) -> float:
        return abs(self.kappa) - 0.5

    def kappa_term(self, symmetry: Symmetry) -> int:
        k = self.kappa
        return k * (k + 1) if symmetry is Symmetry.SPIN else k * (k - 1)

    def label(self, symmetry: Symmetry = Symmetry.SPIN) -> str:
        """Spectroscopic label such as ``0p3/2``.

        For p-spin doublets the kappa > 0 member carries one node fewer
        (``1s1/2`` pairs with ``0d3/2``), so n = 0 has no label there.
        """
        nodes = self.n
        if symmetry is Symmetry.PSPIN and self.kappa > 0:
            nodes -= 1
        if nodes < 0:
            raise InvalidParams("p-spin level with kappa > 0 needs n >= 1")
        return f"{nodes}{_ORBITAL_LETTERS[self.l]}{2 * abs(self.kappa) - 1}/2"


def real_pt_potential(params: PotentialParams, r):
    """Real Poschl-Teller potential at radius ``r`` > 0."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise PoleAtOrigin("r must be positive")
    a = params.alpha
    out = (a * a / (2 * params.M)) * (
        params.barrier / np.sinh(a * r) ** 2 - params.well / np.cosh(a * r) ** 2
    )
    return float(out) if out.ndim == 0 else out


def _shifted_hyperbolics(params: PotentialParams, x):
    """sinh and cosh of alpha(x - i x0) through the deformed functions."""
    q_c = params.q_c
    root = np.sqrt(q_c)
    u = params.alpha * np.asarray(x, dtype=float)
    sh = deformed_sinh(q_c, u) / root
    ch = deformed_cosh(q_c, u) / root
    if np.any(np.abs(sh) < POLE_GUARD):
        raise PoleOnContour("sinh alpha(x - i x0) vanishes")
    return sh, ch


def complex_pt_potential(params: PotentialParams, x):
    """Complex PT-symmetric potential V(x - i x0)."""
    sh, ch = _shifted_hyperbolics(params, x)
    a = params.alpha
    out = (a * a / (2 * params.M)) * (params.barrier / sh**2 - params.well / ch**2)
    return complex(out) if np.ndim(out) == 0 else out


def complex_pt_potential_direct(params: PotentialParams, x):
    """Same potential evaluated with complex sinh/cosh (second evaluation path)."""
    rho = params.alpha * (np.asarray(x, dtype=float) - 1j * params.x0)
    s = np.sinh(rho)
    if np.any(np.abs(s) < POLE_GUARD):
        raise PoleOnContour("sinh alpha(x - i x0) vanishes")
    a = params.alpha
    out = (a * a / (2 * params.M)) * (params.barrier / s**2 - params.well / np.cosh(rho) ** 2)
    return complex(out) if np.ndim(out) == 0 else out


def centrifugal_approx(kappa_term: float, alpha: float, r, d0: float = D0):
    """alpha^2 kappa_term [4 d0 + 1/sinh^2(alpha r)], the stand-in for kappa_term/r^2.

    ``d0`` is fixed at 1/12; ``d0=0`` gives the older constant-free variant.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise PoleAtOrigin("r must be positive")
    out = alpha * alpha * kappa_term * (4 * d0 + 1 / np.sinh(alpha * r) ** 2)
    return float(out) if out.ndim == 0 else out


def effective_potential(params: PotentialParams, V1: float, V2: float, x):
    """Deformed-function form of V2/sinh^2 alpha(x - i x0) - V1/cosh^2 alpha(x - i x0)."""
    q_c = params.q_c
    q = -q_c * q_c
    u2 = 2 * params.alpha * np.asarray(x, dtype=float)
    ch2 = deformed_cosh(q, u2)
    if np.any(np.abs(ch2) < POLE_GUARD):
        raise PoleOnContour("cosh_q(2 alpha x) vanishes")
    out = (2 * q_c**2 * (V1 + V2) + 2 * q_c * (V2 - V1) * deformed_sinh(q, u2)) / ch2**2
    return complex(out) if np.ndim(out) == 0 else out
