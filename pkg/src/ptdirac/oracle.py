"""Finite-difference eigensolver used as an independent check of the analytic energies.

The Schrodinger-type radial equation is discretized on the real axis with
second-order central differences and Dirichlet ends. Its eigenvalues are
found by Sturm-sequence bisection on the symmetric tridiagonal matrix. Because
the potential depends on E (through M + E - C_s or M - E + C_ps), the energy
is the fixed point beta^2(E) = mu_n(E), solved by bisection.

Nothing here calls into the analytic solvers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numba
import numpy as np

from .errors import GridTooCoarse, NoEigenvalue, NotConverged
from .model import D0, PotentialParams, Symmetry, _check_kappa

MAX_OUTER_ITERATIONS = 200


@numba.njit(cache=True)
def _sturm_count(diag, off2, x):
    # number of eigenvalues strictly below x
    count = 0
    q = diag[0] - x
    if q < 0.0:
        count += 1
    for i in range(1, diag.size):
        if q == 0.0:
            q = 1e-300
        q = diag[i] - x - off2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


@numba.njit(cache=True)
def _kth_eigenvalue(diag, off2, k, lo, hi, rtol):
    while hi - lo > rtol * max(1.0, abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        if _sturm_count(diag, off2, mid) > k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class GridSpec:
    """Uniform radial grid; ``r_max`` defaults to 30/alpha."""

    r_min: float = 1e-6
    r_max: float | None = None
    points: int = 4000
    richardson: bool = True

    def __post_init__(self):
        if self.points < 100:
            raise ValueError("points must be at least 100")
        if not self.r_min > 0:
            raise ValueError("r_min must be positive")
        if self.r_max is not None and not self.r_max > self.r_min:
            raise ValueError("r_max must exceed r_min")

    def resolve(self, alpha: float, points: int | None = None) -> np.ndarray:
        r_max = self.r_max if self.r_max is not None else 30.0 / alpha
        n = points or self.points
        return np.linspace(self.r_min, r_max, n + 2)[1:-1]


@dataclass(frozen=True)
class TridiagonalOperator:
    """-d^2/dr^2 + W(r) on interior nodes, as diagonal and off-diagonal."""

    r: np.ndarray
    diag: np.ndarray
    off: np.ndarray
    threshold: float
    well_min: float

    @property
    def h(self) -> float:
        return float(self.r[1] - self.r[0])

    def count_below(self, x: float) -> int:
        return int(_sturm_count(self.diag, self.off**2, float(x)))

    def eigenvalue(self, k: int, rtol: float = 1e-14) -> float:
        """k-th (0-based) eigenvalue by Sturm bisection."""
        off2 = self.off**2
        lo = float(np.min(self.diag - np.abs(np.r_[self.off, 0.0]) - np.abs(np.r_[0.0, self.off])))
        hi = self.threshold + 1.0
        top = float(np.max(self.diag + 2 * np.max(np.abs(self.off))))
        while _sturm_count(self.diag, off2, hi) <= k:
            if hi >= top:
                raise NoEigenvalue(f"operator has fewer than {k + 1} eigenvalues")
            hi = min(top, self.threshold + 2 * (hi - self.threshold) + 1.0)
        return float(_kth_eigenvalue(self.diag, off2, k, lo, hi, rtol))


def _coupling(params: PotentialParams, symmetry: Symmetry, constant: float, E: float) -> float:
    if symmetry is Symmetry.SPIN:
        return params.M + E - constant
    return -(params.M - E + constant)


def beta_squared(params: PotentialParams, symmetry: Symmetry, constant: float, E):
    M = params.M
    if symmetry is Symmetry.SPIN:
        return E * E - M * M + constant * (M - E)
    return E * E - M * M - constant * (M + E)


def kappa_term(kappa: int, symmetry: Symmetry) -> int:
    kappa = _check_kappa(kappa)
    return kappa * (kappa + 1) if symmetry is Symmetry.SPIN else kappa * (kappa - 1)


def effective_radial_operator(params: PotentialParams, symmetry: Symmetry, constant: float,
                              E: float, kappa: int, grid: GridSpec | None = None, *,
                              exact_centrifugal: bool = False, d0: float = D0,
                              points: int | None = None) -> TridiagonalOperator:
    """Discretized -d^2/dr^2 + W(r; E) whose eigenvalue equals beta^2 (or its p-spin analogue).

    With ``exact_centrifugal`` the kappa_term/r^2 term is used instead of its
    exponential approximation.
    """
    grid = grid or GridSpec()
    r = grid.resolve(params.alpha, points)
    h = r[1] - r[0]
    a = params.alpha
    kt = kappa_term(kappa, symmetry)
    s2 = np.sinh(a * r) ** 2
    c2 = np.cosh(a * r) ** 2
    if exact_centrifugal:
        cent = kt / r**2
        threshold = 0.0
    else:
        cent = a * a * kt * (4 * d0 + 1 / s2)
        threshold = 4 * a * a * kt * d0
    g = _coupling(params, symmetry, constant, E)
    pot = g * (a * a / params.M) * (params.barrier / s2 - params.well / c2)
    W = cent + pot
    diag = 2.0 / h**2 + W
    off = np.full(r.size - 1, -1.0 / h**2)
    return TridiagonalOperator(r=r, diag=diag, off=off, threshold=threshold,
                               well_min=float(np.min(W)))


def _check_resolution(op: TridiagonalOperator, mu: float) -> None:
    kinetic = mu - op.well_min
    if kinetic <= 0:
        return
    per_oscillation = 2 * math.pi / (math.sqrt(kinetic) * op.h)
    if per_oscillation < 20:
        raise GridTooCoarse(f"{per_oscillation:.1f} points per oscillation (< 20)")


def radial_eigenvalue(params, symmetry, constant, E, kappa, n, grid: GridSpec | None = None,
                      check_resolution: bool = False, **kw) -> float:
    """n-th eigenvalue mu_n(E), Richardson-extrapolated from N and 2N points if requested.

    Raises
    ------
    GridTooCoarse
        Only when ``check_resolution`` is set and the grid under-resolves the level.
    """
    grid = grid or GridSpec()
    op = effective_radial_operator(params, symmetry, constant, E, kappa, grid, **kw)
    mu = op.eigenvalue(n)
    if check_resolution:
        _check_resolution(op, mu)
    if not grid.richardson:
        return mu
    fine = effective_radial_operator(params, symmetry, constant, E, kappa, grid,
                                     points=2 * grid.points + 1, **kw)
    # N+1 intervals -> 2N+2 intervals halves h exactly
    return (4 * fine.eigenvalue(n) - mu) / 3


@dataclass(frozen=True)
class OracleResult:
    energy: float
    analytic_energy: float | None
    gap: float | None
    iterations: int
    converged: bool
    bound_roots: tuple[float, ...] = field(default_factory=tuple)


def _physical_window(params: PotentialParams, symmetry: Symmetry, constant: float):
    if symmetry is Symmetry.SPIN:
        return 1e-9, params.M + 5 * params.alpha
    return -(params.M + abs(constant) + 5 * params.alpha), -1e-9


def _bisect(func: Callable[[float], float], a: float, b: float, fa: float, tol: float):
    for it in range(1, MAX_OUTER_ITERATIONS + 1):
        m = 0.5 * (a + b)
        fm = func(m)
        if fm == 0.0 or (b - a) / 2 < tol:
            return m, it, True
        if (fa < 0) == (fm < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b), MAX_OUTER_ITERATIONS, False


def oracle_energy(n: int, kappa: int, params: PotentialParams, symmetry: Symmetry,
                  constant: float, grid: GridSpec | None = None, *,
                  analytic_energy: float | None = None, scan_points: int = 40,
                  tol: float = 1e-11, exact_centrifugal: bool = False,
                  window: tuple[float, float] | None = None) -> OracleResult:
    """Energy E with mu_n(E) = beta^2(E) inside the physical-sign window.

    ``analytic_energy`` is only used to fill ``gap`` and, when several bound
    fixed points exist, to pick the one to report.

    Raises
    ------
    NoEigenvalue
        No fixed point in the window is a bound level (mu_n below threshold).
    NotConverged
        Outer bisection exceeded its iteration cap.
    """
    grid = grid or GridSpec()
    lo, hi = window or _physical_window(params, symmetry, constant)
    kt = kappa_term(kappa, symmetry)
    threshold = 0.0 if exact_centrifugal else 4 * params.alpha**2 * kt * D0

    def h(E):
        mu = radial_eigenvalue(params, symmetry, constant, E, kappa, n, grid,
                               exact_centrifugal=exact_centrifugal)
        return beta_squared(params, symmetry, constant, E) - mu

    Es = np.linspace(lo, hi, scan_points)
    vals = [h(E) for E in Es]
    roots = []
    total_iterations = 0
    for i in range(scan_points - 1):
        if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0:
            E, its, ok = _bisect(h, Es[i], Es[i + 1], vals[i], tol)
            total_iterations += its
            if not ok:
                raise NotConverged(f"outer bisection did not converge near E={E}")
            roots.append(E)
    bound = tuple(
        E for E in roots if beta_squared(params, symmetry, constant, E) < threshold
    )
    if not bound:
        raise NoEigenvalue(
            f"no bound level n={n} for kappa={kappa} ({symmetry.value}) in [{lo}, {hi}]"
        )
    if analytic_energy is not None:
        energy = min(bound, key=lambda e: abs(e - analytic_energy))
        gap = energy - analytic_energy
    else:
        energy = bound[-1] if symmetry is Symmetry.SPIN else bound[0]
        gap = None
    radial_eigenvalue(params, symmetry, constant, energy, kappa, n, grid,
                      check_resolution=True, exact_centrifugal=exact_centrifugal)
    return OracleResult(energy=float(energy), analytic_energy=analytic_energy, gap=gap,
                        iterations=total_iterations, converged=True, bound_roots=bound)


def bound_level_count(params, symmetry, constant, E, kappa, grid: GridSpec | None = None) -> int:
    """Number of operator eigenvalues at energy E strictly below the continuum threshold."""
    grid = grid or GridSpec(richardson=False)
    op = effective_radial_operator(params, symmetry, constant, E, kappa, grid)
    return op.count_below(op.threshold)


@dataclass(frozen=True)
class LevelShift:
    n: int
    approx_energy: float
    exact_energy: float

    @property
    def shift(self) -> float:
        return self.approx_energy - self.exact_energy


@dataclass(frozen=True)
class ApproximationReport:
    alpha: float
    kappa: int
    symmetry: Symmetry
    levels: tuple[LevelShift, ...]


def approximation_error_report(params: PotentialParams, kappa: int, symmetry: Symmetry,
                               constant: float, grid: GridSpec | None = None,
                               levels=(0,)) -> ApproximationReport:
    """Energy shift between the approximate and exact centrifugal terms, per level."""
    out = []
    for n in levels:
        approx = oracle_energy(n, kappa, params, symmetry, constant, grid)
        exact = oracle_energy(n, kappa, params, symmetry, constant, grid, exact_centrifugal=True,
                              analytic_energy=approx.energy)
        out.append(LevelShift(n=n, approx_energy=approx.energy, exact_energy=exact.energy))
    return ApproximationReport(alpha=params.alpha, kappa=kappa, symmetry=symmetry,
                               levels=tuple(out))


# --- ODE residual checks -------------------------------------------------

_D2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_D1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0


@dataclass(frozen=True)
class EquationForm:
    """Linear second-order equation p(t) y'' + q(t) y' + r(t) y = 0 in the grid variable t."""

    p: Callable[[np.ndarray], np.ndarray]
    q: Callable[[np.ndarray], np.ndarray]
    r: Callable[[np.ndarray], np.ndarray]


def ode_residual(sampler: Callable[[np.ndarray], np.ndarray], form: EquationForm,
                 grid: np.ndarray) -> float:
    """Max |p y'' + q y' + r y| over interior points over the max term magnitude.

    Derivatives use fourth-order central differences on the uniform ``grid``;
    a vanishing function gives 0.
    """
    t = np.asarray(grid, dtype=float)
    h = t[1] - t[0]
    y = np.asarray(sampler(t), dtype=complex)
    inner = t[2:-2]
    stack = np.stack([y[k:y.size - 4 + k] for k in range(5)])
    d2 = _D2 @ stack / h**2
    d1 = _D1 @ stack / h
    y0 = y[2:-2]
    terms = [form.p(inner) * d2, form.q(inner) * d1, form.r(inner) * y0]
    scale = max(float(np.max(np.abs(term))) for term in terms)
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(sum(terms))) / scale)


def schrodinger_form(params: PotentialParams, etilde_sq: float, V1: float, V2: float) -> EquationForm:
    """y'' + [Etilde^2 - V2/sinh^2 alpha(x - i x0) + V1/cosh^2 alpha(x - i x0)] y = 0 in x."""
    def r(x):
        rho = params.alpha * (x - 1j * params.x0)
        return etilde_sq - V2 / np.sinh(rho) ** 2 + V1 / np.cosh(rho) ** 2

    return EquationForm(p=lambda x: np.ones_like(x), q=lambda x: np.zeros_like(x), r=r)


def hypergeometric_form(alpha: float, etilde_sq: float, V1: float, V2: float,
                        z0: complex, dz: complex) -> EquationForm:
    """z(1-z) y'' + (1/2 - z) y' - [Etilde^2 + V1/(z(1-z)) + (V2-V1)/(1-z)] y / (4 alpha^2) = 0

    along the straight path z = z0 + t dz (derivatives taken in t).
    """
    def z(t):
        return z0 + t * dz

    def p(t):
        zz = z(t)
        return zz * (1 - zz) / dz**2

    def q(t):
        return (0.5 - z(t)) / dz

    def r(t):
        zz = z(t)
        return -(etilde_sq + V1 / (zz * (1 - zz)) + (V2 - V1) / (1 - zz)) / (4 * alpha**2)

    return EquationForm(p=p, q=q, r=r)
