"""Pseudospin-symmetric limit, Sigma(r) = C_ps.

The energy equation is implemented twice: directly, and as the image of the
spin equation under the parametric map (F <-> G, kappa -> kappa - 1,
V -> -V, E -> -E, C_s -> -C_ps). The two must agree pointwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import _wave
from .errors import ComplexBranch, DivergentLimit, ExponentSingular, NoRootFound
from .model import D0, PotentialParams, Symmetry, _check_kappa
from .roots import EnergySolution, ExponentSet, SolverOptions, default_window, scan_roots
from .spin import SINGULAR_GUARD, NMax, spin_form_residual


@dataclass(frozen=True)
class PSpinCouplings:
    V1t: float
    V2t: float
    Etilde_sq: float
    beta_sq: float
    Mps: float


@dataclass(frozen=True)
class DiracInput:
    """Arguments of an energy equation, in the form the parametric map acts on.

    ``well`` and ``barrier`` are the signed strengths multiplying 1/cosh^2
    and 1/sinh^2; ``component`` names the spinor the equation is written for.
    """

    energy: float
    kappa: int
    constant: float
    well: float
    barrier: float
    component: str = "F"


def parametric_map(inp: DiracInput) -> DiracInput:
    """F <-> G, kappa -> kappa - 1, V -> -V, E -> -E, C -> -C."""
    return replace(
        inp,
        energy=-inp.energy,
        kappa=inp.kappa - 1,
        constant=-inp.constant,
        well=-inp.well,
        barrier=-inp.barrier,
        component="G" if inp.component == "F" else "F",
    )


def pspin_couplings(params: PotentialParams, Cps: float, E: float, kappa: int) -> PSpinCouplings:
    # signs follow from Delta = 2V in the lower-component equation
    kappa = _check_kappa(kappa)
    a2 = params.alpha**2
    kk = kappa * (kappa - 1)
    Mps = params.M - E + Cps
    beta_sq = E * E - params.M**2 - Cps * (params.M + E)
    return PSpinCouplings(
        V1t=-a2 * params.well * Mps / params.M,
        V2t=a2 * (kk - params.barrier * Mps / params.M),
        Etilde_sq=beta_sq - 4 * a2 * kk * D0,
        beta_sq=beta_sq,
        Mps=Mps,
    )


def _radicands(params: PotentialParams, Cps, E, kappa):
    Mps = params.M - E + Cps
    r1 = 1 - 4 * Mps * params.well / params.M
    r2 = (2 * kappa - 1) ** 2 - 4 * Mps * params.barrier / params.M
    return r1, r2


def pspin_exponents(params: PotentialParams, Cps: float, E: float, kappa: int) -> ExponentSet:
    """nu and delta of the lower-component ansatz.

    Raises
    ------
    ComplexBranch
        With the offending radicand attached.
    """
    kappa = _check_kappa(kappa)
    r1, r2 = _radicands(params, Cps, E, kappa)
    if r1 < 0:
        raise ComplexBranch("1 - 4 M_ps A(A+alpha)/M is negative", radicand=r1)
    if r2 < 0:
        raise ComplexBranch("(2 kappa - 1)^2 - 4 M_ps B(B-alpha)/M is negative", radicand=r2)
    nu = -(1 - math.sqrt(r1)) / 4
    delta = -(1 + math.sqrt(r2)) / 4
    c = pspin_couplings(params, Cps, E, kappa)
    a2 = params.alpha**2
    c1 = -nu * nu - nu / 2 + c.V1t / (4 * a2)
    c2 = -delta * delta - delta / 2 + c.V2t / (4 * a2)
    return ExponentSet(lam=nu, eta=delta, sigma=1, tau=-1, c1=c1, c2=c2)


def _pspin_direct(E, n, kappa, M, alpha, well, barrier, C, sigma, tau):
    E = np.asarray(E, dtype=float)
    Mps = M - E + C
    r1 = 1 - 4 * Mps * well / M
    r2 = (2 * kappa - 1) ** 2 - 4 * Mps * barrier / M
    lhs = M * M - E * E + C * (E + M)
    bracket = -n - 0.5 + (sigma * np.sqrt(r1) + tau * np.sqrt(r2)) / 4
    kk = kappa * (kappa - 1)
    rhs = -4 * D0 * alpha**2 * kk + 4 * alpha**2 * bracket**2
    return lhs - rhs


def pspin_form_residual(E, n, kappa, M, alpha, well, barrier, C, sigma=1, tau=-1):
    """Vectorised p-spin residual for generic strengths; NaN off the real branch."""
    return _pspin_direct(E, n, kappa, M, alpha, well, barrier, C, sigma, tau)


def pspin_energy_residual(E, n, kappa, params: PotentialParams, Cps, sigma=1, tau=-1) -> float:
    kappa = _check_kappa(kappa)
    r1, r2 = _radicands(params, Cps, E, kappa)
    if r1 < 0 or r2 < 0:
        raise ComplexBranch(f"negative radicand at E={E}", radicand=min(r1, r2))
    return float(_pspin_direct(E, n, kappa, params.M, params.alpha, params.well,
                               params.barrier, Cps, sigma, tau))


def pspin_residual_via_map(E, n, kappa, params: PotentialParams, Cps, sigma=1, tau=-1):
    """The spin residual evaluated at the parametric image of the p-spin arguments."""
    m = parametric_map(DiracInput(E, kappa, Cps, params.well, params.barrier, component="G"))
    return spin_form_residual(m.energy, n, m.kappa, params.M, params.alpha, m.well,
                              m.barrier, m.constant, sigma, tau)


def pspin_n_max(params: PotentialParams, Cps: float, E: float, kappa: int) -> NMax:
    ex = pspin_exponents(params, Cps, E, kappa)
    r1, r2 = _radicands(params, Cps, E, kappa)
    return NMax(formula=math.sqrt(r1) / 4 - math.sqrt(r2) / 4 - 0.5, exponent_sum=ex.total)


def _lhs(E, M, C):
    return M * M - E * E + C * (E + M)


def _build_solution(E, bracket, n, kappa, params, Cps, sigma, tau) -> EnergySolution:
    ex = pspin_exponents(params, Cps, E, kappa)
    if (sigma, tau) != (1, -1):
        r1, r2 = _radicands(params, Cps, E, kappa)
        ex = replace(ex, lam=(-1 + sigma * math.sqrt(r1)) / 4, eta=(-1 + tau * math.sqrt(r2)) / 4,
                     sigma=sigma, tau=tau)
    nm = pspin_n_max(params, Cps, E, kappa)
    c = pspin_couplings(params, Cps, E, kappa)
    res = abs(pspin_energy_residual(E, n, kappa, params, Cps, sigma, tau))
    negative = E < 0
    within = n <= math.floor(nm.formula)
    notes = []
    if not negative:
        notes.append("positive energy")
    if not within:
        notes.append("n exceeds n_max")
    return EnergySolution(
        energy=float(E),
        residual=res,
        lhs=float(_lhs(E, params.M, Cps)),
        n_max=nm.formula,
        exponents=ex,
        bracket=bracket,
        physical=negative and within,
        n=n,
        kappa=kappa,
        symmetry=Symmetry.PSPIN,
        constant=Cps,
        etilde_sq=c.Etilde_sq,
        notes=tuple(notes),
    )


def solve_pspin_energy(n: int, kappa: int, params: PotentialParams, Cps: float,
                       opts: SolverOptions | None = None) -> list[EnergySolution]:
    """All roots of the p-spin energy equation; negative energies within n_max are physical."""
    opts = opts or SolverOptions()
    kappa = _check_kappa(kappa)
    if n < 0:
        raise ValueError("n must be nonnegative")
    lo, hi = opts.window or default_window(params, Cps)

    def f(E):
        return _pspin_direct(E, n, kappa, params.M, params.alpha, params.well,
                             params.barrier, Cps, opts.sigma, opts.tau)

    scan = scan_roots(f, lo, hi, opts.points, opts.xtol)
    if not scan.roots:
        raise NoRootFound(f"no p-spin root for n={n}, kappa={kappa} in [{lo}, {hi}]")
    return [
        _build_solution(E, br, n, kappa, params, Cps, opts.sigma, opts.tau)
        for E, br in zip(scan.roots, scan.brackets)
    ]


def pspin_lower_component(sol: EnergySolution, params: PotentialParams, x):
    """Unnormalized lower component G(x)."""
    ex = sol.exponents
    value, _ = _wave.component(sol.n, ex.lam, ex.eta, params, x)
    return value


def pspin_upper_component(sol: EnergySolution, params: PotentialParams, x):
    """Unnormalized upper component F = (dG/dr - kappa/r G) / (M - E + C_ps)."""
    ex = sol.exponents
    denom = params.M - sol.energy + sol.constant
    if abs(denom) < SINGULAR_GUARD:
        raise DivergentLimit("M - E + C_ps vanishes")
    if abs(ex.lam - 0.25) < SINGULAR_GUARD:
        raise ExponentSingular("nu = 1/4")
    value, deriv = _wave.component(sol.n, ex.lam, ex.eta, params, x)
    r = np.asarray(x, dtype=float) - 1j * params.x0
    return (deriv - sol.kappa / r * value) / denom


def pspin_schrodinger_terms(sol: EnergySolution, params: PotentialParams):
    c = pspin_couplings(params, sol.constant, sol.energy, sol.kappa)
    return c.Etilde_sq, c.V1t, c.V2t
