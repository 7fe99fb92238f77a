import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptdirac.limits import (
    NonRelInputs,
    alt_pspin_residual_via_map,
    alt_pspin_spectrum_residual,
    alt_pt_potential,
    alt_spin_spectrum_residual,
    nonrel_energy,
    nonrel_energy_strengths,
    nonrel_gap_sweep,
    solve_alt_spin_energy,
)
from ptdirac.model import AltPTParams, Symmetry
from ptdirac.oracle import oracle_energy
from ptdirac.pspin import pspin_form_residual
from ptdirac.spin import physical_root, solve_spin_energy, spin_form_residual

ALT = AltPTParams(lambda_alt=3.0, k_alt=2.0)


def _matched(params):
    lam = (-1 + math.sqrt(1 + 4 * params.well)) / 2
    k = (1 + math.sqrt(1 + 4 * params.barrier)) / 2
    return AltPTParams(lambda_alt=lam, k_alt=k)


def test_matched_strengths(table_params):
    alt = _matched(table_params)
    assert alt.well == pytest.approx(table_params.well, rel=1e-14)
    assert alt.barrier == pytest.approx(table_params.barrier, rel=1e-14)


def test_spin_substitution_identity(table_params):
    alt = _matched(table_params)
    E = np.linspace(0.5, 6, 500)
    for n, kappa in ((0, 1), (1, -3), (2, 2)):
        a = alt_spin_spectrum_residual(E, n, kappa, table_params, alt, 0.35)
        b = spin_form_residual(E, n, kappa, table_params.M, table_params.alpha, table_params.well,
                               table_params.barrier, 0.35)
        assert np.max(np.abs(a - b) / np.maximum(1, np.abs(b))) <= 1e-12


def test_pspin_image_identity(table_params):
    E = np.linspace(-9, -1, 500)
    with np.errstate(invalid="ignore"):
        for n, kappa in ((1, 2), (2, -3)):
            a = alt_pspin_spectrum_residual(E, n, kappa, table_params, ALT, -15.0)
            b = alt_pspin_residual_via_map(E, n, kappa, table_params, ALT, -15.0)
            c = pspin_form_residual(E, n, kappa, table_params.M, table_params.alpha, ALT.well,
                                    ALT.barrier, -15.0)
            ok = ~np.isnan(a)
            assert np.array_equal(ok, ~np.isnan(b))
            assert np.max(np.abs(a[ok] - b[ok]) / np.maximum(1, np.abs(a[ok]))) <= 1e-12
            assert np.array_equal(a[ok], c[ok])


def test_alt_roots_equal_spin_roots(table_params):
    alt = _matched(table_params)
    roots = solve_alt_spin_energy(0, 1, table_params, alt, 0.35)
    s = physical_root(solve_spin_energy(0, 1, table_params, 0.35))
    assert min(abs(r - s.energy) for r in roots) <= 1e-10


def test_klein_gordon_limit_matches_oracle(table_params):
    # with C_s = 0 the upper-component equation is the Klein-Gordon equation
    s = physical_root(solve_spin_energy(0, 1, table_params, 0.0))
    o = oracle_energy(0, 1, table_params, Symmetry.SPIN, 0.0, analytic_energy=s.energy)
    assert abs(o.gap) <= 1e-6


@given(st.floats(0.1, 5), st.floats(1.1, 6), st.floats(1.1, 6))
def test_alt_potential_mirror_invariance(x, lam, k):
    a = alt_pt_potential(0.35, 5.0, lam, k, x, 0.1)
    b = alt_pt_potential(0.35, 5.0, -lam - 1, -k + 1, x, 0.1)
    assert abs(a - b) <= 1e-13 * max(1.0, abs(a))


def test_nonrel_trivial_strengths():
    assert nonrel_energy_strengths(5.0, 0, 0, 0.35, 0.0, 0.0) == 0.0


def test_nonrel_alpha_scaling():
    e1 = nonrel_energy(NonRelInputs(mu=5.0, l=1, n=0, alt=ALT, alpha=0.2))
    e2 = nonrel_energy(NonRelInputs(mu=5.0, l=1, n=0, alt=ALT, alpha=0.4))
    assert e2 == pytest.approx(4 * e1, rel=1e-14)


def test_nonrel_inputs_validation():
    with pytest.raises(ValueError):
        NonRelInputs(mu=0.0, l=0, n=0, alt=ALT, alpha=0.35)
    with pytest.raises(ValueError):
        NonRelInputs(mu=1.0, l=-1, n=0, alt=ALT, alpha=0.35)


def test_nonrel_gap_shrinks_for_s_waves():
    sweep = nonrel_gap_sweep((50.0, 500.0, 5000.0), 0, -1, 0.35, ALT, sigma=1, tau=-1)
    gaps = [abs(b - e) for _, b, e in sweep]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-9


def test_nonrel_gap_for_p_waves_falls_like_inverse_mass():
    # the centrifugal term carries 4 d0 while the nonrelativistic formula carries d0,
    # leaving a residual alpha^2 l(l+1) d0 (3/2) / M
    sweep = nonrel_gap_sweep((50.0, 500.0), 0, 1, 0.35, ALT, sigma=1, tau=-1)
    gaps = [abs(b - e) for _, b, e in sweep]
    assert gaps[0] / gaps[1] == pytest.approx(10, rel=0.05)
