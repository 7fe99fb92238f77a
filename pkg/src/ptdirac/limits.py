"""Alternative (lambda, k) parametrization, Klein-Gordon and nonrelativistic limits."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoRootFound
from .model import D0, AltPTParams, PotentialParams, _check_kappa
from .pspin import DiracInput, parametric_map, pspin_form_residual
from .roots import SolverOptions, scan_roots
from .spin import spin_form_residual


@dataclass(frozen=True)
class NonRelInputs:
    mu: float
    l: int
    n: int
    alt: AltPTParams
    alpha: float

    def __post_init__(self):
        if not self.mu > 0:
            raise ValueError("mu must be positive")
        if self.l < 0 or self.n < 0:
            raise ValueError("l and n must be nonnegative")


def alt_pt_potential(alpha: float, M: float, lambda_alt: float, k_alt: float, x, x0: float = 0.0):
    """k(k-1)/sinh^2 - lambda(lambda+1)/cosh^2 form of the potential on x - i x0.

    Takes raw floats so the mirrored parameter sets can be evaluated.
    """
    rho = alpha * (np.asarray(x, dtype=float) - 1j * x0)
    out = (alpha**2 / (2 * M)) * (
        k_alt * (k_alt - 1) / np.sinh(rho) ** 2 - lambda_alt * (lambda_alt + 1) / np.cosh(rho) ** 2
    )
    return complex(out) if np.ndim(out) == 0 else out


def alt_spin_spectrum_residual(E, n, kappa, params: PotentialParams, alt: AltPTParams, Cs,
                               sigma=1, tau=-1):
    """Spin energy equation with A(A+alpha) -> lambda(lambda+1), B(B-alpha) -> k(k-1)."""
    kappa = _check_kappa(kappa)
    return spin_form_residual(E, n, kappa, params.M, params.alpha, alt.well, alt.barrier,
                              Cs, sigma, tau)


def alt_pspin_spectrum_residual(E, n, kappa, params: PotentialParams, alt: AltPTParams, Cps,
                                sigma=1, tau=-1):
    """p-spin energy equation for the (lambda, k) parametrization."""
    kappa = _check_kappa(kappa)
    return pspin_form_residual(E, n, kappa, params.M, params.alpha, alt.well, alt.barrier,
                               Cps, sigma, tau)


def alt_pspin_residual_via_map(E, n, kappa, params: PotentialParams, alt: AltPTParams, Cps,
                               sigma=1, tau=-1):
    m = parametric_map(DiracInput(E, kappa, Cps, alt.well, alt.barrier, component="G"))
    return spin_form_residual(m.energy, n, m.kappa, params.M, params.alpha, m.well, m.barrier,
                              m.constant, sigma, tau)


def solve_alt_spin_energy(n, kappa, params: PotentialParams, alt: AltPTParams, Cs,
                          opts: SolverOptions | None = None) -> list[float]:
    """Roots of the alternative-parametrization spin equation in (0, M + 5 alpha)."""
    opts = opts or SolverOptions()
    lo, hi = opts.window or (1e-9, params.M + 5 * params.alpha)
    scan = scan_roots(
        lambda E: alt_spin_spectrum_residual(E, n, kappa, params, alt, Cs, opts.sigma, opts.tau),
        lo, hi, opts.points, opts.xtol,
    )
    if not scan.roots:
        raise NoRootFound("no root of the alternative spin equation")
    return scan.roots


def nonrel_energy_strengths(mu: float, l: int, n: int, alpha: float, well: float, barrier: float,
                            sigma: int = 1, tau: int = 1) -> float:
    """Nonrelativistic energy for raw strengths well = lambda(lambda+1), barrier = k(k-1).

    E = alpha^2 l(l+1) d0 / (2 mu)
        - (2 alpha^2 / mu) [-n - 1/2 + (sigma sqrt(1 + 8 well) + tau sqrt((1+2l)^2 + 8 barrier)) / 4]^2
    """
    a2 = alpha**2
    bracket = -n - 0.5 + (
        sigma * math.sqrt(1 + 8 * well) + tau * math.sqrt((1 + 2 * l) ** 2 + 8 * barrier)
    ) / 4
    return a2 * l * (l + 1) * D0 / (2 * mu) - (2 * a2 / mu) * bracket**2


def nonrel_energy(inp: NonRelInputs, sigma: int = 1, tau: int = 1) -> float:
    """Nonrelativistic energy of the alternative parametrization.

    The default signs are the printed ones (both +); see
    :func:`nonrel_energy_strengths` for the formula.
    """
    return nonrel_energy_strengths(inp.mu, inp.l, inp.n, inp.alpha, inp.alt.well, inp.alt.barrier,
                                   sigma, tau)


def nonrel_gap_sweep(masses, n: int, kappa: int, alpha: float, alt: AltPTParams,
                     sigma: int = 1, tau: int = 1, points: int = 4000) -> list[tuple[float, float, float]]:
    """|(E_Dirac - M) - E_nonrel| for each mass, with C_s = 0 and mu = M.

    The Dirac root is searched just below threshold, within
    M - 50 alpha^2 (l+1)^2 ... M, where the nonrelativistic level must sit.
    Returns tuples (M, E_Dirac - M, E_nonrel).
    """
    l = -kappa - 1 if kappa < 0 else kappa
    out = []
    for M in masses:
        e_nr = nonrel_energy(NonRelInputs(mu=M, l=l, n=n, alt=alt, alpha=alpha), sigma, tau)
        params = PotentialParams(alpha=alpha, A=2.0, B=2.0, M=M, x0=0.0)
        depth = max(abs(e_nr) * 4, 1e-6)
        opts = SolverOptions(points=points, sigma=sigma, tau=tau,
                             window=(M - depth, M + 0.25 * depth))
        roots = solve_alt_spin_energy(n, kappa, params, alt, 0.0, opts)
        E = min(roots, key=lambda e: abs((e - M) - e_nr))
        out.append((M, E - M, e_nr))
    return out
