"""Inverse Joukowski map from [-1, 1] onto the upper unit half-circle"""
import math

from .errors import DomainError, EmptyIntersection
from .intervals import (
    ONE, UNIT, ComplexInterval, RealInterval, iv_add, iv_intersect, iv_mul,
    iv_sqr, iv_sqrt, iv_sub,
)


def clip_to_domain(x: RealInterval) -> RealInterval:
    """x intersected with [-1, 1]; DomainError if they are disjoint"""
    try:
        return iv_intersect(x, UNIT)
    except EmptyIntersection as exc:
        raise DomainError(f"{x} does not meet [-1, 1]") from exc


def one_minus_square(x: RealInterval) -> RealInterval:
    """
    Enclosure of {1 - t^2 : t in x} for x inside [-1, 1].

    (1 - x)(1 + x) is exact at x = +-1 and accurate near the boundary, while
    1 - x^2 is tighter for wide x around 0; both enclose the true set so their
    intersection does too.
    """
    factored = iv_mul(iv_sub(ONE, x), iv_add(ONE, x))
    expanded = iv_sub(ONE, iv_sqr(x))
    return iv_intersect(factored, expanded)


def sqrt_one_minus_square(x: RealInterval) -> RealInterval:
    return iv_sqrt(one_minus_square(x))


def to_unit_circle(x: RealInterval) -> ComplexInterval:
    """
    Enclose z = t + i*sqrt(1 - t^2) for every t in x ∩ [-1, 1].

    The upper branch is used; Chebyshev sums with real coefficients take the
    same value on both branches.
    """
    t = clip_to_domain(x)
    return ComplexInterval(t, sqrt_one_minus_square(t))


def eigenvector_condition(x: float) -> float:
    """2-norm condition number of the eigenvector matrix of the Clenshaw step at x"""
    if not -1.0 < x < 1.0:
        raise DomainError(f"condition number undefined at x = {x}")
    if x <= 0.0:
        return math.sqrt((1.0 - x) / (1.0 + x))
    return math.sqrt((1.0 + x) / (1.0 - x))
