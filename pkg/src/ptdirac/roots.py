"""Root isolation shared by the spin and p-spin energy solvers."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .model import Symmetry


@dataclass(frozen=True)
class SolverOptions:
    """Controls for the energy scan.

    ``window`` overrides the default scan interval. ``points`` is the number
    of uniform grid points used to bracket sign changes; each bracket is then
    refined by Brent's method to ``xtol``.
    """

    points: int = 20000
    xtol: float = 1e-12
    sigma: int = 1
    tau: int = -1
    window: tuple[float, float] | None = None

    def __post_init__(self):
        if self.points < 2:
            raise ValueError("points must be at least 2")
        if not self.xtol > 0:
            raise ValueError("xtol must be positive")
        if self.sigma not in (-1, 1) or self.tau not in (-1, 1):
            raise ValueError("sigma and tau must be +1 or -1")
        if self.window is not None and not self.window[0] < self.window[1]:
            raise ValueError("window must be increasing")


@dataclass(frozen=True)
class ExponentSet:
    """Exponents of the spinor ansatz with residuals of their quadratic equations.

    For the p-spin case ``lam`` and ``eta`` hold nu and delta.
    """

    lam: float
    eta: float
    sigma: int
    tau: int
    c1: float = 0.0
    c2: float = 0.0

    @property
    def total(self) -> float:
        return self.lam + self.eta


@dataclass(frozen=True)
class EnergySolution:
    """One converged root of an energy equation."""

    energy: float
    residual: float
    lhs: float
    n_max: float
    exponents: ExponentSet
    bracket: tuple[float, float]
    physical: bool
    n: int
    kappa: int
    symmetry: Symmetry
    constant: float
    etilde_sq: float
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def exponent_sum(self) -> float:
        return self.exponents.total


@dataclass(frozen=True)
class ScanResult:
    brackets: list[tuple[float, float]]
    roots: list[float]
    excluded: list[tuple[float, float]]


def masked_values(func: Callable[[np.ndarray], np.ndarray], grid: np.ndarray) -> np.ndarray:
    with np.errstate(invalid="ignore"), warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        return np.asarray(func(grid), dtype=float)


def _excluded_runs(grid: np.ndarray, valid: np.ndarray) -> list[tuple[float, float]]:
    runs = []
    start = None
    for i, ok in enumerate(valid):
        if not ok and start is None:
            start = i
        elif ok and start is not None:
            runs.append((float(grid[start]), float(grid[i - 1])))
            start = None
    if start is not None:
        runs.append((float(grid[start]), float(grid[-1])))
    return runs


def scan_roots(
    func: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    points: int,
    xtol: float,
) -> ScanResult:
    """Bracket sign changes of ``func`` on a uniform grid and refine them.

    ``func`` must be vectorised and return NaN where undefined; such points
    never take part in a bracket and are reported as excluded runs.
    """
    grid = np.linspace(lo, hi, points)
    vals = masked_values(func, grid)
    valid = np.isfinite(vals)

    def scalar(e):
        return float(masked_values(func, np.array([e]))[0])

    brackets = []
    roots = []
    for i in range(points - 1):
        if not (valid[i] and valid[i + 1]):
            continue
        a, b = grid[i], grid[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0:
            root = a
        elif fa * fb < 0:
            root = brentq(scalar, a, b, xtol=xtol, maxiter=500)
        else:
            continue
        if roots and abs(root - roots[-1]) <= 2 * xtol:
            continue
        brackets.append((float(a), float(b)))
        roots.append(float(root))
    return ScanResult(brackets=brackets, roots=roots, excluded=_excluded_runs(grid, valid))


def default_window(params, constant: float) -> tuple[float, float]:
    """Scan interval wide enough for both energy signs, +-(M + |C| + 5 alpha)."""
    half = params.M + abs(constant) + 5 * params.alpha
    return (-half, half)
