"""Special functions with complex parameters.

Terminating Gauss hypergeometric series, Jacobi polynomials by recurrence,
and complex powers with the branch tracked along an ordered contour.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonTerminating, PhaseJump, PoleInC, ZeroBase

#: tolerance for "is (numerically) an integer" decisions
INTEGER_TOL = 1e-12


@dataclass(frozen=True)
class GaussParams:
    """Upper parameters (a, b), lower parameter c and argument z.

    z may be a scalar or an ndarray of evaluation points.
    """

    a: complex
    b: complex
    c: complex
    z: complex


def _as_nonneg_termination_index(w: complex) -> int | None:
    """Return N >= 0 if w is within INTEGER_TOL of -N, else None."""
    w = complex(w)
    n = int(round(w.real))
    if n <= 0 and abs(w - n) <= INTEGER_TOL:
        return -n
    return None


def gauss2f1_terminating(p: GaussParams, n_terms: int | None = None) -> complex | np.ndarray:
    """Sum a terminating Gauss series by running Pochhammer recurrences.

    One of a, b must equal -N for an integer N >= 0 (within INTEGER_TOL);
    the sum then has N + 1 terms.  ``n_terms`` overrides the number of
    summed terms (extra terms beyond the termination index vanish).

    Raises NonTerminating if neither upper parameter is a non-positive
    integer and PoleInC if c is a non-positive integer hit before the
    series terminates.
    """
    candidates = [
        n for n in (
            _as_nonneg_termination_index(p.a),
            _as_nonneg_termination_index(p.b),
        ) if n is not None
    ]
    if not candidates:
        raise NonTerminating(f"neither a={p.a} nor b={p.b} is a non-positive integer")
    n_stop = min(candidates)

    m = _as_nonneg_termination_index(p.c)
    if m is not None and m < n_stop:
        raise PoleInC(f"c={p.c} poles the series before termination at N={n_stop}")

    if n_terms is None:
        n_terms = n_stop + 1

    z = np.asarray(p.z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)

    term = np.ones_like(z)
    total = term.copy()
    for k in range(1, n_terms):
        term = term * ((p.a + k - 1) * (p.b + k - 1) / ((p.c + k - 1) * k)) * z
        total = total + term
    return complex(total[0]) if scalar else total


def jacobi_poly(n: int, alpha: complex, beta: complex, z: complex | np.ndarray) -> complex | np.ndarray:
    """Jacobi polynomial P_n^(alpha, beta)(z) by the three-term recurrence.

    The recurrence is run with complex parameters; it is a polynomial
    identity, so no branch choices arise.
    """
    if n < 0:
        raise ValueError("polynomial degree must be >= 0")
    z_arr = np.asarray(z, dtype=complex)
    scalar = z_arr.ndim == 0
    z_arr = np.atleast_1d(z_arr)

    p_prev = np.ones_like(z_arr)
    if n == 0:
        return complex(p_prev[0]) if scalar else p_prev
    s = alpha + beta
    p_cur = (alpha - beta) / 2 + (s + 2) * z_arr / 2
    for k in range(2, n + 1):
        a_k = 2 * k * (k + s) * (2 * k + s - 2)
        b_k = (2 * k + s - 1) * ((2 * k + s) * (2 * k + s - 2) * z_arr + alpha**2 - beta**2)
        c_k = 2 * (k + alpha - 1) * (k + beta - 1) * (2 * k + s)
        p_cur, p_prev = (b_k * p_cur - c_k * p_prev) / a_k, p_cur
    return complex(p_cur[0]) if scalar else p_cur


def complex_power_tracked(base_samples, exponent: complex) -> complex | np.ndarray:
    """Raise contour samples to a complex power with a continuous branch.

    ``base_samples`` is an ordered sequence along a contour.  The phase is
    unwrapped sample-to-sample and anchored to the principal argument at
    the middle sample, so base**exponent varies continuously even when the
    principal argument would wrap.

    Raises ZeroBase on a vanishing base and PhaseJump when consecutive
    samples differ in argument by pi or more (grid too coarse to track).
    """
    base = np.asarray(base_samples, dtype=complex)
    scalar = base.ndim == 0
    base = np.atleast_1d(base)
    if np.any(base == 0):
        raise ZeroBase("zero base in branch-tracked power")

    steps = np.angle(base[1:] / base[:-1])
    if steps.size and np.max(np.abs(steps)) >= np.pi:
        raise PhaseJump("consecutive samples differ in argument by >= pi")

    rel = np.concatenate(([0.0], np.cumsum(steps)))
    anchor = base.shape[0] // 2
    phase = np.angle(base[anchor]) + rel - rel[anchor]
    out = np.exp(exponent * (np.log(np.abs(base)) + 1j * phase))
    return complex(out[0]) if scalar else out


def pochhammer(w: complex, n: int) -> complex:
    """Rising factorial (w)_n as a plain product."""
    out = complex(1.0)
    for j in range(n):
        out *= w + j
    return out
