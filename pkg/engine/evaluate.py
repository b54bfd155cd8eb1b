"""Enclosure methods for Chebyshev expansions p(x) = sum c_k T_k(x).

Every eval_* function returns an EnclosureResult whose value contains
{p(t) : t in x, c_k in their intervals} (for laurent_horner and ica_eig,
t ranges over x ∩ [-1, 1]). Numerical failures are raised as EnclosureError
subclasses; compute.evaluate_methods turns them into statuses.
"""
from time import perf_counter_ns

from .errors import EigDegenerate
from .intervals import (
    ONE, ZERO, ComplexInterval, RealInterval, cx_add, cx_conj, cx_from_real,
    cx_mul, cx_sub, iv_add, iv_div, iv_mid, iv_mul, iv_neg, iv_sub,
)
from .joukowski import clip_to_domain, sqrt_one_minus_square, to_unit_circle
from .models import ChebExpansion, ClenshawState, EnclosureResult, Method, Status, TransformedState

CX_ZERO = ComplexInterval(ZERO, ZERO)
HALF = RealInterval(0.5, 0.5)


def _result(method: Method, value: RealInterval, start_ns: int) -> EnclosureResult:
    elapsed = perf_counter_ns() - start_ns
    status = Status.OK if value.is_finite else Status.UNBOUNDED
    return EnclosureResult(method=method, value=value, elapsed_ns=elapsed, status=status)


def horner_on_circle(p: ChebExpansion, z: ComplexInterval) -> ComplexInterval:
    """Interval Horner for sum c_k z^k with real interval coefficients"""
    coeffs = p.coeffs
    acc = cx_from_real(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = cx_add(cx_mul(acc, z), cx_from_real(c))
    return acc


def eval_laurent_horner(p: ChebExpansion, x: RealInterval) -> EnclosureResult:
    """
    Laurent-Horner enclosure.

    With z on the unit circle, T_k(x) = Re(z^k), so p(x) = Re(sum c_k z^k)
    and the sum is evaluated by interval Horner in the complex plane. Only the
    real part of the final rectangle is kept.
    """
    start = perf_counter_ns()
    z = to_unit_circle(x)
    acc = horner_on_circle(p, z)
    return _result(Method.LAURENT_HORNER, acc.re, start)


def laurent_symmetric_sum(p: ChebExpansion, x: RealInterval) -> ComplexInterval:
    """(sum c_k z^k + sum c_k conj(z)^k) / 2, whose exact value is real"""
    z = to_unit_circle(x)
    total = cx_add(horner_on_circle(p, z), horner_on_circle(p, cx_conj(z)))
    return ComplexInterval(iv_mul(total.re, HALF), iv_mul(total.im, HALF))


def eval_clenshaw_interval(p: ChebExpansion, x: RealInterval) -> EnclosureResult:
    """Clenshaw recurrence b_k = 2x b_{k+1} - b_{k+2} + c_k run in interval arithmetic"""
    start = perf_counter_ns()
    two_x = iv_add(x, x)
    state = ClenshawState(b_hi=ZERO, b_lo=ZERO)
    for c in reversed(p.coeffs):
        b = iv_add(iv_sub(iv_mul(two_x, state.b_hi), state.b_lo), c)
        state = ClenshawState(b_hi=b, b_lo=state.b_hi)
    value = iv_sub(state.b_hi, iv_mul(x, state.b_lo))
    return _result(Method.CLENSHAW_INTERVAL, value, start)


def eval_ica_eig(p: ChebExpansion, x: RealInterval) -> EnclosureResult:
    """
    Eigenvalue-transformed Clenshaw iteration.

    M = V D V^-1 with D = diag(z, conj z); the transformed state
    V^-1 (b_k, b_{k+1}) is iterated with the diagonal D and p is recovered
    as [1, -x] V b_0 = i s (v1 - v2), s = sqrt(1 - x^2).
    """
    start = perf_counter_ns()
    t = clip_to_domain(x)
    s = sqrt_one_minus_square(t)
    if s.inf <= 0.0:
        raise EigDegenerate(f"sqrt(1 - x^2) encloses 0 at x = {x}")
    z = ComplexInterval(t, s)
    z_bar = cx_conj(z)
    two_s = iv_add(s, s)

    state = TransformedState(v1=CX_ZERO, v2=CX_ZERO)
    for c in reversed(p.coeffs):
        # V^-1 (c, 0) = (-i c / 2s, +i c / 2s)
        q = iv_div(c, two_s)
        state = TransformedState(
            v1=cx_add(cx_mul(z, state.v1), ComplexInterval(ZERO, iv_neg(q))),
            v2=cx_add(cx_mul(z_bar, state.v2), ComplexInterval(ZERO, q)),
        )
    value = cx_mul(ComplexInterval(ZERO, s), cx_sub(state.v1, state.v2)).re
    return _result(Method.ICA_EIG, value, start)


def eval_recurrence_direct(p: ChebExpansion, x: RealInterval) -> EnclosureResult:
    """Sum c_k T_k with T_{k+1} = 2x T_k - T_{k-1} in interval arithmetic"""
    start = perf_counter_ns()
    coeffs = p.coeffs
    acc = coeffs[0]
    if len(coeffs) > 1:
        two_x = iv_add(x, x)
        t_prev, t_cur = ONE, x
        acc = iv_add(acc, iv_mul(coeffs[1], t_cur))
        for c in coeffs[2:]:
            t_prev, t_cur = t_cur, iv_sub(iv_mul(two_x, t_cur), t_prev)
            acc = iv_add(acc, iv_mul(c, t_cur))
    return _result(Method.RECURRENCE_DIRECT, acc, start)


def eval_clenshaw_float(p: ChebExpansion, x: float) -> float:
    """Plain floating-point Clenshaw on coefficient midpoints (not validated)"""
    b1 = b2 = 0.0
    for c in reversed(p.coeffs):
        b1, b2 = 2.0 * x * b1 - b2 + iv_mid(c), b1
    return b1 - x * b2


METHOD_FUNCS = {
    Method.LAURENT_HORNER: eval_laurent_horner,
    Method.CLENSHAW_INTERVAL: eval_clenshaw_interval,
    Method.ICA_EIG: eval_ica_eig,
    Method.RECURRENCE_DIRECT: eval_recurrence_direct,
}
