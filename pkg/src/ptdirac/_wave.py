"""Hypergeometric spinor building block shared by both symmetry limits.

Both limits produce a component of the form

    2^(e1+e2) p1^(-e1) p2^(-e2) 2F1(-n, n - 2(e1+e2); 1/2 - 2 e1; p1/2)

with w(x) = e^(-2i alpha x0) sinh_q(2 alpha x) = cosh 2 alpha(x - i x0),
p1 = 1 + w = 2 cosh^2 alpha(x - i x0) and p2 = 1 - w = -2 sinh^2 alpha(x - i x0).
With this assignment the hypergeometric variable p1/2 is the one produced by
the change of variables to the hypergeometric equation.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import PoleOnContour
from .model import POLE_GUARD, PotentialParams
from .specfun import deformed_cosh, deformed_sinh, gauss_2f1, gauss_2f1_derivative


def shifted_variable(params: PotentialParams, x):
    """Return (w, dw/dx) on the real axis."""
    q_c = params.q_c
    q = -q_c * q_c
    u2 = 2 * params.alpha * np.asarray(x, dtype=float)
    phase = np.conj(q_c)
    w = phase * deformed_sinh(q, u2)
    dw = 2 * params.alpha * phase * deformed_cosh(q, u2)
    return w, dw


def component(n: int, e1: float, e2: float, params: PotentialParams, x):
    """Value and x-derivative of the hypergeometric spinor component."""
    w, dw = shifted_variable(params, x)
    p1 = 1 + w
    p2 = 1 - w
    if np.any(np.abs(p1) < POLE_GUARD) or np.any(np.abs(p2) < POLE_GUARD):
        raise PoleOnContour("p1 or p2 vanishes on the requested grid")
    # principal logs stay continuous on the real line for 0 < alpha x0 < pi/2
    pref = np.exp((e1 + e2) * math.log(2.0) - e1 * np.log(p1) - e2 * np.log(p2))
    a, b, c = -n, n - 2 * (e1 + e2), 0.5 - 2 * e1
    z = p1 / 2
    f = gauss_2f1(a, b, c, z)
    fp = gauss_2f1_derivative(a, b, c, z)
    value = pref * f
    deriv = pref * (f * dw * (e2 / p2 - e1 / p1) + fp * dw / 2)
    return value, deriv


def component_z(n: int, e1: float, e2: float, z):
    """The same component written in the hypergeometric variable z = p1/2.

    Equals ``component`` at z = cosh^2 alpha(x - i x0); principal branches.
    """
    z = np.asarray(z, dtype=complex)
    f = gauss_2f1(-n, n - 2 * (e1 + e2), 0.5 - 2 * e1, z)
    return np.exp(-e1 * np.log(z) - e2 * np.log(1 - z)) * f
