import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptdirac.errors import InvalidKappa, InvalidParams, PoleAtOrigin, PoleOnContour
from ptdirac.model import (
    AltPTParams,
    PotentialParams,
    QuantumNumbers,
    Symmetry,
    SymmetryChoice,
    centrifugal_approx,
    complex_pt_potential,
    complex_pt_potential_direct,
    effective_potential,
    l_from_kappa,
    pspin_partner,
    real_pt_potential,
    spin_partner,
)

P = PotentialParams(alpha=0.35, A=8.0, B=2.0, M=5.0, x0=0.1)
kappas = st.integers(-12, 12).filter(lambda k: k != 0)


@pytest.mark.parametrize("kappa,l", [(-1, 0), (1, 1), (-2, 1), (2, 2), (-3, 2)])
def test_spin_orbital_number(kappa, l):
    assert l_from_kappa(kappa, Symmetry.SPIN) == l


@pytest.mark.parametrize("kappa,lt", [(1, 0), (-1, 1), (2, 1), (-2, 2), (3, 2)])
def test_pseudo_orbital_number(kappa, lt):
    assert l_from_kappa(kappa, Symmetry.PSPIN) == lt
    assert l_from_kappa(kappa, SymmetryChoice(Symmetry.PSPIN, -15.0)) == lt


@pytest.mark.parametrize("bad", [0, 1.5, True])
def test_invalid_kappa(bad):
    with pytest.raises(InvalidKappa, match="kappa must be nonzero"):
        l_from_kappa(bad, Symmetry.SPIN)


@given(kappas.filter(lambda k: abs(k) != 1))
def test_partner_invariants(k):
    s = spin_partner(k)
    p = pspin_partner(k)
    assert s * (s + 1) == k * (k + 1)
    assert p * (p - 1) == k * (k - 1)
    assert l_from_kappa(s, Symmetry.SPIN) == l_from_kappa(k, Symmetry.SPIN)
    assert l_from_kappa(p, Symmetry.PSPIN) == l_from_kappa(k, Symmetry.PSPIN)
    assert spin_partner(s) == k and pspin_partner(p) == k


def test_unpaired_states_have_no_partner():
    # s1/2 (spin) and its p-spin counterpart are singlets: the partner would be kappa = 0
    with pytest.raises(InvalidKappa, match="no spin partner"):
        spin_partner(-1)
    with pytest.raises(InvalidKappa, match="no p-spin partner"):
        pspin_partner(1)


def test_quantum_numbers_and_labels():
    q = QuantumNumbers(0, 1)
    assert (q.l, q.j) == (1, 0.5)
    assert q.label() == "0p1/2"
    assert QuantumNumbers(0, -2).label() == "0p3/2"
    assert QuantumNumbers(1, -3).label() == "1d5/2"
    assert QuantumNumbers(1, -1).label(Symmetry.PSPIN) == "1s1/2"
    assert QuantumNumbers(1, 2).label(Symmetry.PSPIN) == "0d3/2"
    assert QuantumNumbers(1, 2).kappa_term(Symmetry.PSPIN) == 2
    with pytest.raises(InvalidParams):
        QuantumNumbers(0, 2).label(Symmetry.PSPIN)
    with pytest.raises(InvalidParams):
        QuantumNumbers(-1, 1)
    with pytest.raises(InvalidKappa):
        QuantumNumbers(0, 0)


def test_params_invariants():
    with pytest.raises(InvalidParams):
        PotentialParams(alpha=0.0, A=8, B=2, M=5)
    with pytest.raises(InvalidParams):
        PotentialParams(alpha=0.35, A=8, B=2, M=-1)
    with pytest.raises(InvalidParams):
        PotentialParams(alpha=1.0, A=8, B=2, M=5, x0=2.0)
    with pytest.raises(InvalidParams):
        PotentialParams(alpha=0.35, A=math.nan, B=2, M=5)
    with pytest.raises(InvalidParams):
        P.replace(A=0.2).require_physical()
    with pytest.raises(InvalidParams):
        P.replace(B=0.35).require_physical()
    with pytest.raises(InvalidParams):
        P.replace(x0=0.0).require_physical()
    assert P.require_physical() is P
    assert P.well == pytest.approx(8 * 8.35)
    assert P.barrier == pytest.approx(2 * 1.65)
    with pytest.raises(InvalidParams):
        SymmetryChoice(Symmetry.SPIN, math.inf)
    with pytest.raises(InvalidParams):
        AltPTParams(1.0, 2.0)


def test_real_potential():
    r = 1.3
    a = P.alpha
    expected = a * a / 10 * (P.barrier / math.sinh(a * r) ** 2 - P.well / math.cosh(a * r) ** 2)
    assert real_pt_potential(P, r) == pytest.approx(expected, rel=1e-15)
    far = real_pt_potential(P, 40 / a)
    assert far < 0 and abs(far) < 1e-20
    well_only = real_pt_potential(P.replace(B=a), np.array([0.5, 2.0]))
    assert np.allclose(well_only, -a * a / 10 * P.well / np.cosh(a * np.array([0.5, 2.0])) ** 2)
    with pytest.raises(PoleAtOrigin):
        real_pt_potential(P, 0.0)


def test_complex_potential_two_paths_agree():
    x = np.linspace(-5, 5, 201)
    a = complex_pt_potential(P, x)
    b = complex_pt_potential_direct(P, x)
    assert np.max(np.abs(a - b) / np.abs(b)) <= 1e-12


def test_complex_potential_reduces_to_real():
    x = np.linspace(0.2, 5, 50)
    ref = real_pt_potential(P, x)
    errs = [np.max(np.abs(complex_pt_potential(P.replace(x0=x0), x) - ref) / np.abs(ref))
            for x0 in (1e-4, 1e-6)]
    assert errs[1] < 1e-4
    assert errs[1] < errs[0] / 50


@given(st.floats(0.1, 5))
def test_pt_symmetry(x):
    v = complex_pt_potential(P, x)
    assert abs(complex_pt_potential(P, -x) - v.conjugate()) <= 1e-12 * abs(v)


def test_pole_on_contour():
    with pytest.raises(PoleOnContour):
        complex_pt_potential(P.replace(x0=0.0), 0.0)
    with pytest.raises(PoleOnContour):
        complex_pt_potential_direct(P.replace(x0=0.0), np.array([1.0, 0.0]))


def test_centrifugal_approximation():
    assert centrifugal_approx(0, 0.35, 2.0) == 0.0
    rel = abs(centrifugal_approx(1.0, 1.0, 0.1) * 0.01 - 1)
    assert 0.1**4 / 30 <= rel <= 2 * 0.1**4 / 15
    r = 1.0
    for alpha in (1e-4, 1e-5):
        assert centrifugal_approx(2, alpha, r) / (2 / r**2) == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(PoleAtOrigin):
        centrifugal_approx(2, 0.35, -1.0)
    # the constant-free variant
    assert centrifugal_approx(2, 0.35, 1.0, d0=0) == pytest.approx(2 * 0.35**2 / math.sinh(0.35) ** 2)


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(0.05, 6))
def test_effective_potential_form(V1, V2, x):
    rho = P.alpha * (x - 1j * P.x0)
    direct = V2 / np.sinh(rho) ** 2 - V1 / np.cosh(rho) ** 2
    assert abs(effective_potential(P, V1, V2, x) - direct) <= 1e-12 * max(1.0, abs(direct))


def test_effective_potential_vanishes_without_strengths():
    assert effective_potential(P, 0.0, 0.0, np.linspace(0.1, 3, 5)) == pytest.approx(np.zeros(5))


@given(st.floats(0.1, 5))
def test_parameter_mirror_invariance(x):
    a = P.alpha
    mirrored = P.replace(A=-(P.A + a), B=-(P.B - a))
    assert complex_pt_potential(mirrored, x) == pytest.approx(complex_pt_potential(P, x), rel=1e-13)
