import dataclasses
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptdirac.errors import ComplexBranch, DivergentLimit, ExponentSingular, InvalidKappa, NoRootFound
from ptdirac.model import PotentialParams
from ptdirac.pspin import (
    DiracInput,
    parametric_map,
    pspin_couplings,
    pspin_energy_residual,
    pspin_exponents,
    pspin_lower_component,
    pspin_n_max,
    pspin_form_residual,
    pspin_residual_via_map,
    pspin_upper_component,
    solve_pspin_energy,
)
from ptdirac.roots import SolverOptions
from ptdirac.spin import physical_root

CPS = -15.0


@pytest.fixture(scope="module")
def ground(table_params):
    return physical_root(solve_pspin_energy(1, 2, table_params, CPS))


@settings(max_examples=60)
@given(st.floats(-12, 12), st.integers(0, 3), st.integers(-5, 6).filter(lambda k: k != 0),
       st.floats(0.5, 10), st.floats(0.5, 4), st.floats(-20, 5))
def test_map_reproduces_direct_residual(E, n, kappa, A, B, C):
    p = PotentialParams(alpha=0.35, A=A, B=B, M=5.0, x0=0.1)
    with np.errstate(invalid="ignore"):
        a = pspin_form_residual(E, n, kappa, p.M, p.alpha, p.well, p.barrier, C)
        b = pspin_residual_via_map(E, n, kappa, p, C)
    if np.isnan(a):
        assert np.isnan(b)
    else:
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_map_is_an_involution_up_to_the_kappa_shift():
    inp = DiracInput(energy=-5.1, kappa=2, constant=-15.0, well=66.8, barrier=3.3, component="G")
    back = parametric_map(parametric_map(inp))
    assert back == dataclasses.replace(inp, kappa=inp.kappa - 2)
    assert parametric_map(inp).component == "F"


def test_exponents_at_zero_coupling(table_params):
    kappa = 2
    E = table_params.M + CPS
    ex = pspin_exponents(table_params, CPS, E, kappa)
    assert ex.lam == 0.0
    assert ex.eta == pytest.approx(-(1 + abs(2 * kappa - 1)) / 4)


def test_radicands_and_complex_branch(table_params, ground):
    ex = pspin_exponents(table_params, CPS, ground.energy, 2)
    assert abs(ex.c1) <= 1e-10 and abs(ex.c2) <= 1e-10
    with pytest.raises(ComplexBranch) as info:
        pspin_exponents(table_params, -10.0, -5.170251165, 2)
    assert info.value.radicand < 0
    with pytest.raises(ComplexBranch):
        pspin_energy_residual(-5.170251165, 1, 2, table_params, -10.0)


def test_couplings_signs(table_params):
    c = pspin_couplings(table_params, CPS, -5.0, 2)
    assert c.Mps == pytest.approx(table_params.M + 5.0 + CPS)
    assert c.V1t == pytest.approx(-table_params.alpha**2 * table_params.well * c.Mps / table_params.M)


@given(st.floats(-12, -1), st.integers(0, 3), st.integers(2, 6))
def test_residual_doublet_identity(E, n, k):
    args = (5.0, 0.35, 8 * 8.35, 2 * 1.65, CPS)
    with np.errstate(invalid="ignore"):
        a = pspin_form_residual(E, n, k, *args)
        b = pspin_form_residual(E, n, -k + 1, *args)
    assert (np.isnan(a) and np.isnan(b)) or a == b


def test_frozen_ground_state(ground):
    assert ground.energy == pytest.approx(-5.170251164980762, abs=1e-9)
    assert abs(ground.energy - (-5.170251165)) <= 5e-9
    assert ground.physical and ground.energy < 0


def test_last_table_row_is_not_a_bound_state(table_params):
    sols = solve_pspin_energy(2, -4, table_params, CPS)
    match = min(sols, key=lambda s: abs(s.energy + 4.900619782))
    assert abs(match.energy + 4.900619782) <= 5e-9
    assert not match.physical
    assert match.n_max < 2
    assert "n exceeds n_max" in match.notes


def test_no_root_with_text_constant(table_params):
    sols = []
    try:
        sols = solve_pspin_energy(1, 2, table_params, -10.0)
    except NoRootFound:
        pass
    assert not any(s.physical for s in sols)


def test_n_max_and_quantization(table_params, ground):
    nm = pspin_n_max(table_params, CPS, ground.energy, 2)
    assert nm.formula == pytest.approx(nm.exponent_sum, abs=1e-12)
    assert 1 <= nm.formula
    gap = 2 * table_params.alpha * (ground.exponent_sum - 1) - math.sqrt(-ground.etilde_sq)
    assert abs(gap) <= 1e-8


def test_energies_do_not_depend_on_x0(table_params):
    energies = {physical_root(solve_pspin_energy(1, 2, table_params.replace(x0=x0), CPS)).energy
                for x0 in (0.05, 0.1, 0.3)}
    assert len(energies) == 1


def test_bad_input(table_params):
    with pytest.raises(InvalidKappa):
        solve_pspin_energy(1, 0, table_params, CPS)
    with pytest.raises(NoRootFound):
        solve_pspin_energy(1, 2, table_params, CPS, SolverOptions(window=(-1.0, -0.9), points=20))


# --- spinors -------------------------------------------------------------

def test_lower_component_decays(table_params):
    for n in (1, 2):
        s = physical_root(solve_pspin_energy(n, 2, table_params, CPS))
        x = np.linspace(0.5, 30 / table_params.alpha, 400)
        G = np.abs(pspin_lower_component(s, table_params, x))
        assert G[-1] < 1e-6 * G.max()


def test_upper_matches_numerical_derivative(table_params):
    x = np.linspace(0.3, 10, 300)
    r = x - 1j * table_params.x0
    h = 1e-5
    for n in (0, 1, 2):
        s = physical_root(solve_pspin_energy(n, 2, table_params, CPS))
        G = lambda xx: pspin_lower_component(s, table_params, xx)  # noqa: E731
        dG = (G(x + h) - G(x - h)) / (2 * h)
        F_fd = (dG - s.kappa / r * G(x)) / (table_params.M - s.energy + CPS)
        F = pspin_upper_component(s, table_params, x)
        assert np.max(np.abs(F - F_fd)) / np.max(np.abs(F)) <= 1e-7


def test_upper_component_guards(ground, table_params):
    bad = dataclasses.replace(ground, constant=ground.energy - table_params.M)
    with pytest.raises(DivergentLimit):
        pspin_upper_component(bad, table_params, 1.0)
    quarter = dataclasses.replace(ground, exponents=dataclasses.replace(ground.exponents, lam=0.25))
    with pytest.raises(ExponentSingular):
        pspin_upper_component(quarter, table_params, 1.0)
