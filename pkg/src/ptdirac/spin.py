"""Spin-symmetric limit, Delta(r) = C_s.

The sum potential is twice the complex Poschl-Teller potential. With the
centrifugal approximation the upper component obeys a Schrodinger-type
equation whose quantization gives a transcendental equation in E. Roots are
bracketed on a uniform grid and refined by Brent's method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _wave
from .errors import ComplexBranch, DivergentLimit, ExponentSingular, NoRootFound
from .model import D0, PotentialParams, Symmetry, _check_kappa
from .roots import (
    EnergySolution,
    ExponentSet,
    SolverOptions,
    default_window,
    scan_roots,
)

SINGULAR_GUARD = 1e-12


@dataclass(frozen=True)
class SpinCouplings:
    V1: float
    V2: float
    Etilde_sq: float
    beta_sq: float
    Ms: float


class NMax(NamedTuple):
    formula: float
    exponent_sum: float


def spin_couplings(params: PotentialParams, Cs: float, E: float, kappa: int) -> SpinCouplings:
    kappa = _check_kappa(kappa)
    a2 = params.alpha**2
    kk = kappa * (kappa + 1)
    Ms = params.M + E - Cs
    beta_sq = E * E - params.M**2 + Cs * (params.M - E)
    return SpinCouplings(
        V1=a2 * params.well * Ms / params.M,
        V2=a2 * (kk + params.barrier * Ms / params.M),
        Etilde_sq=beta_sq - 4 * a2 * kk * D0,
        beta_sq=beta_sq,
        Ms=Ms,
    )


def spin_exponents(couplings: SpinCouplings, alpha: float, sigma: int = 1, tau: int = -1) -> ExponentSet:
    """Roots of the two exponent quadratics for the chosen signs."""
    a2 = alpha * alpha
    r1 = 1 + 4 * couplings.V1 / a2
    r2 = 1 + 4 * couplings.V2 / a2
    if r1 < 0:
        raise ComplexBranch("1 + 4 V1/alpha^2 is negative", radicand=r1)
    if r2 < 0:
        raise ComplexBranch("1 + 4 V2/alpha^2 is negative", radicand=r2)
    lam = (-1 + sigma * math.sqrt(r1)) / 4
    eta = (-1 + tau * math.sqrt(r2)) / 4
    c1 = -lam * lam - lam / 2 + couplings.V1 / (4 * a2)
    c2 = -eta * eta - eta / 2 + couplings.V2 / (4 * a2)
    return ExponentSet(lam=lam, eta=eta, sigma=sigma, tau=tau, c1=c1, c2=c2)


def spin_form_residual(E, n, kappa, M, alpha, well, barrier, C, sigma=1, tau=-1):
    """LHS - RHS of the spin energy equation for generic well/barrier strengths.

    Vectorised in ``E``; NaN where a radicand is negative.
    """
    E = np.asarray(E, dtype=float)
    Ms = M + E - C
    r1 = 1 + 4 * Ms * well / M
    r2 = (2 * kappa + 1) ** 2 + 4 * Ms * barrier / M
    lhs = M * M - E * E + C * (E - M)
    bracket = -n - 0.5 + (sigma * np.sqrt(r1) + tau * np.sqrt(r2)) / 4
    kk = kappa * (kappa + 1)  # integer product keeps doublet partners bit-identical
    rhs = -4 * D0 * alpha**2 * kk + 4 * alpha**2 * bracket**2
    return lhs - rhs


def _lhs(E, M, C):
    return M * M - E * E + C * (E - M)


def spin_energy_residual(E, n, kappa, params: PotentialParams, Cs, sigma=1, tau=-1) -> float:
    """Residual of the spin energy equation at a single energy.

    Raises
    ------
    ComplexBranch
        If either square-root radicand is negative at ``E``.
    """
    kappa = _check_kappa(kappa)
    Ms = params.M + E - Cs
    r1 = 1 + 4 * Ms * params.well / params.M
    r2 = (2 * kappa + 1) ** 2 + 4 * Ms * params.barrier / params.M
    if r1 < 0 or r2 < 0:
        raise ComplexBranch(f"negative radicand at E={E}", radicand=min(r1, r2))
    return float(
        spin_form_residual(E, n, kappa, params.M, params.alpha, params.well, params.barrier, Cs, sigma, tau)
    )


def spin_n_max(params: PotentialParams, Cs: float, E: float, kappa: int, sigma=1, tau=-1) -> NMax:
    """Level bound at energy ``E`` and the exponent sum lambda + eta."""
    c = spin_couplings(params, Cs, E, kappa)
    ex = spin_exponents(c, params.alpha, sigma, tau)
    r1 = 1 + 4 * c.V1 / params.alpha**2
    r2 = 1 + 4 * c.V2 / params.alpha**2
    return NMax(formula=(math.sqrt(r1) - math.sqrt(r2)) / 4 - 0.5, exponent_sum=ex.total)


def _build_solution(E, bracket, n, kappa, params, Cs, sigma, tau) -> EnergySolution:
    c = spin_couplings(params, Cs, E, kappa)
    ex = spin_exponents(c, params.alpha, sigma, tau)
    nm = spin_n_max(params, Cs, E, kappa, sigma, tau)
    lhs = _lhs(E, params.M, Cs)
    res = abs(spin_energy_residual(E, n, kappa, params, Cs, sigma, tau))
    notes = []
    positive = E > 0
    within = n <= math.floor(nm.formula)
    if not positive:
        notes.append("negative energy")
    if not within:
        notes.append("n exceeds n_max")
    return EnergySolution(
        energy=float(E),
        residual=res,
        lhs=float(lhs),
        n_max=nm.formula,
        exponents=ex,
        bracket=bracket,
        physical=positive and within,
        n=n,
        kappa=kappa,
        symmetry=Symmetry.SPIN,
        constant=Cs,
        etilde_sq=c.Etilde_sq,
        notes=tuple(notes),
    )


def solve_spin_energy(n: int, kappa: int, params: PotentialParams, Cs: float,
                      opts: SolverOptions | None = None) -> list[EnergySolution]:
    """All roots of the spin energy equation in the scan window.

    Every root is returned; ``physical`` marks positive energies with
    ``n <= floor(n_max)``.

    Raises
    ------
    NoRootFound
        If the residual has no sign change in the window.
    """
    opts = opts or SolverOptions()
    kappa = _check_kappa(kappa)
    if n < 0:
        raise ValueError("n must be nonnegative")
    lo, hi = opts.window or default_window(params, Cs)

    def f(E):
        return spin_form_residual(E, n, kappa, params.M, params.alpha, params.well,
                                  params.barrier, Cs, opts.sigma, opts.tau)

    scan = scan_roots(f, lo, hi, opts.points, opts.xtol)
    if not scan.roots:
        raise NoRootFound(f"no spin root for n={n}, kappa={kappa} in [{lo}, {hi}]")
    return [
        _build_solution(E, br, n, kappa, params, Cs, opts.sigma, opts.tau)
        for E, br in zip(scan.roots, scan.brackets)
    ]


def physical_root(solutions: list[EnergySolution]) -> EnergySolution | None:
    """First physical root, or None."""
    for s in solutions:
        if s.physical:
            return s
    return None


def spin_upper_component(sol: EnergySolution, params: PotentialParams, x):
    """Unnormalized upper component F(x)."""
    ex = sol.exponents
    value, _ = _wave.component(sol.n, ex.lam, ex.eta, params, x)
    return value


def spin_lower_component(sol: EnergySolution, params: PotentialParams, x):
    """Unnormalized lower component G = (kappa/r F + dF/dr) / (M + E - C_s), r = x - i x0."""
    ex = sol.exponents
    denom = params.M + sol.energy - sol.constant
    if abs(denom) < SINGULAR_GUARD:
        raise DivergentLimit("M + E - C_s vanishes")
    if abs(ex.lam - 0.25) < SINGULAR_GUARD:
        raise ExponentSingular("lambda = 1/4")
    value, deriv = _wave.component(sol.n, ex.lam, ex.eta, params, x)
    r = np.asarray(x, dtype=float) - 1j * params.x0
    return (sol.kappa / r * value + deriv) / denom


def spin_schrodinger_terms(sol: EnergySolution, params: PotentialParams):
    """(Etilde^2, V1, V2) of the upper-component equation at the solution."""
    c = spin_couplings(params, sol.constant, sol.energy, sol.kappa)
    return c.Etilde_sq, c.V1, c.V2
