"""Special functions behind the closed-form spinors.

Pochhammer symbols, the Gauss hypergeometric series, Jacobi polynomials and
the q-deformed hyperbolic functions.  Everything works in double precision
and accepts complex arguments; the hypergeometric and Jacobi routines also
accept numpy arrays for the argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DeformedOverflow, NonConvergent, PoleAtC, SeriesDomainError

SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 10000
# exp() overflows just above 709.78
_EXP_LIMIT = 709.0


@dataclass(frozen=True)
class Hyp2F1Args:
    """Parameters of 2F1(a, b; c; z)."""

    a: float
    b: float
    c: float
    z: complex

    def shifted(self) -> "Hyp2F1Args":
        return Hyp2F1Args(self.a + 1, self.b + 1, self.c + 1, self.z)


def _nonpositive_int(v: float) -> int | None:
    """Return m if v == -m for an integer m >= 0, else None."""
    if v <= 0 and float(v).is_integer():
        return int(-v)
    return None


def pochhammer(a: float, m: int) -> float:
    """Rising factorial (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1."""
    if m < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = 1.0
    for k in range(m):
        out *= a + k
    return out


def _termination_degree(a: float, b: float) -> int | None:
    degrees = [d for d in (_nonpositive_int(a), _nonpositive_int(b)) if d is not None]
    return min(degrees) if degrees else None


def gauss_2f1(a: float, b: float, c: float, z):
    """Gauss hypergeometric function 2F1(a, b; c; z).

    If ``a`` or ``b`` is a nonpositive integer ``-n`` the series is summed
    exactly as a degree-``n`` polynomial, valid for any finite ``z``.
    Otherwise the series is summed for ``|z| < 1`` until the next term drops
    below ``1e-16`` of the partial sum.

    Parameters
    ----------
    a, b, c : float
        Series parameters.
    z : complex or array_like
        Argument.

    Returns
    -------
    complex or ndarray of complex

    Raises
    ------
    PoleAtC
        ``c`` is a nonpositive integer whose pole is reached before the
        series terminates.
    SeriesDomainError
        Non-terminating series with ``|z| >= 1``.
    NonConvergent
        More than 10000 terms needed.
    """
    scalar = np.ndim(z) == 0
    zz = np.asarray(z, dtype=complex)
    degree = _termination_degree(a, b)
    c_pole = _nonpositive_int(c)

    if degree is not None:
        if c_pole is not None and c_pole < degree:
            raise PoleAtC(f"c={c} is a pole reached before the degree-{degree} termination")
        total = np.ones_like(zz)
        term = np.ones_like(zz)
        for k in range(degree):
            # the product (a+k)(b+k) is commutative, so 2F1(a,b)=2F1(b,a) bit for bit
            term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * zz
            total = total + term
        return complex(total) if scalar else total

    if c_pole is not None:
        raise PoleAtC(f"c={c} is a nonpositive integer and the series does not terminate")
    if np.any(np.abs(zz) >= 1.0):
        raise SeriesDomainError("non-terminating 2F1 requires |z| < 1")

    total = np.ones_like(zz)
    term = np.ones_like(zz)
    for k in range(SERIES_MAX_TERMS):
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * zz
        total = total + term
        if np.all(np.abs(term) <= SERIES_RTOL * np.abs(total)):
            return complex(total) if scalar else total
    raise NonConvergent(f"2F1({a}, {b}; {c}; z) did not converge in {SERIES_MAX_TERMS} terms")


def gauss_2f1_derivative(a: float, b: float, c: float, z):
    """d/dz 2F1(a, b; c; z) = (ab/c) 2F1(a+1, b+1; c+1; z)."""
    if a == 0 or b == 0:
        zz = np.asarray(z, dtype=complex)
        return 0j if np.ndim(z) == 0 else np.zeros_like(zz)
    return (a * b / c) * gauss_2f1(a + 1, b + 1, c + 1, z)


def _jacobi_power(n: int, a: float, b: float, x):
    # P_n = sum_k (a+k+1)_(n-k)/(n-k)! (n+a+b+1)_k/k! ((x-1)/2)^k
    t = (x - 1) / 2
    total = np.zeros_like(x)
    for k in range(n + 1):
        coef = (pochhammer(a + k + 1, n - k) / math.factorial(n - k)
                * pochhammer(n + a + b + 1, k) / math.factorial(k))
        total = total + coef * t**k
    return total


def jacobi_p(n: int, a: float, b: float, x):
    """Jacobi polynomial P_n^(a,b)(x).

    Uses the three-term recurrence for classical parameters (a, b > -1).
    Outside that range the recurrence loses up to seven digits through
    cancellation, so the expansion in powers of (x - 1)/2 is summed instead;
    the same expansion covers recurrence denominators that vanish.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    scalar = np.ndim(x) == 0
    xx = np.asarray(x, dtype=complex)
    if n == 0:
        out = np.ones_like(xx)
        return complex(out) if scalar else out

    ab = a + b
    degenerate = any(
        k * (k + ab) * (2 * k + ab - 2) == 0 for k in range(2, n + 1)
    )
    if degenerate or a <= -1 or b <= -1:
        out = _jacobi_power(n, a, b, xx)
        return complex(out) if scalar else out

    p_prev = np.ones_like(xx)
    p_curr = (a - b) / 2 + (ab + 2) * xx / 2
    for k in range(2, n + 1):
        s = 2 * k + ab
        c0 = 2 * k * (k + ab) * (s - 2)
        c1 = (s - 1) * (s * (s - 2) * xx + a * a - b * b)
        c2 = 2 * (k + a - 1) * (k + b - 1) * s
        p_prev, p_curr = p_curr, (c1 * p_curr - c2 * p_prev) / c0
    return complex(p_curr) if scalar else p_curr


def _check_exponent(u) -> None:
    if np.any(np.abs(np.asarray(u, dtype=float)) > _EXP_LIMIT):
        raise DeformedOverflow("|u| exceeds the double-precision exponent range")


def deformed_sinh(q, u):
    """sinh_q(u) = (e^u - q e^-u) / 2."""
    _check_exponent(u)
    return (np.exp(u) - q * np.exp(-u)) / 2


def deformed_cosh(q, u):
    """cosh_q(u) = (e^u + q e^-u) / 2."""
    _check_exponent(u)
    return (np.exp(u) + q * np.exp(-u)) / 2


def deformation(alpha: float, x0: float) -> complex:
    """q_c = exp(2 i alpha x0)."""
    return complex(np.exp(2j * alpha * x0))
