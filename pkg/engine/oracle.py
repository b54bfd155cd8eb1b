"""Exact rational evaluation of Chebyshev expansions, the ground truth for soundness checks"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceLimit
from .intervals import RealInterval, iv_contains
from .models import ChebExpansion, OracleLimits


@dataclass(frozen=True)
class RationalExpansion:
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("expansion needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def rational_expansion(p: ChebExpansion) -> RationalExpansion:
    """Exact form of a thin-coefficient expansion"""
    for k, c in enumerate(p.coeffs):
        if not c.is_thin:
            raise ValueError(f"coefficient {k} is not thin: {c}")
    return RationalExpansion(tuple(Fraction(c.inf) for c in p.coeffs))


def _check_size(q: Fraction, limits: OracleLimits):
    if q.numerator.bit_length() > limits.max_bits or q.denominator.bit_length() > limits.max_bits:
        raise ResourceLimit(f"intermediate rational exceeds {limits.max_bits} bits")


def _check_degree(p: RationalExpansion, limits: OracleLimits):
    if p.degree > limits.max_degree:
        raise ResourceLimit(f"degree {p.degree} exceeds oracle cap {limits.max_degree}")


def exact_clenshaw(p: RationalExpansion, x, limits: OracleLimits | None = None) -> Fraction:
    """Exact Clenshaw: b_k = 2x b_{k+1} - b_{k+2} + c_k, p(x) = b_0 - x b_1"""
    limits = limits or OracleLimits()
    _check_degree(p, limits)
    x = Fraction(x)
    b1 = b2 = Fraction(0)
    for c in reversed(p.coeffs):
        b1, b2 = 2 * x * b1 - b2 + c, b1
        _check_size(b1, limits)
    return b1 - x * b2


def exact_direct(p: RationalExpansion, x, limits: OracleLimits | None = None) -> Fraction:
    """Independent path: sum c_k T_k(x) with T_k from the exact three-term recurrence"""
    limits = limits or OracleLimits()
    _check_degree(p, limits)
    x = Fraction(x)
    t_prev, t_cur = Fraction(1), x
    total = p.coeffs[0]
    for k, c in enumerate(p.coeffs[1:], start=1):
        if k > 1:
            t_prev, t_cur = t_cur, 2 * x * t_cur - t_prev
            _check_size(t_cur, limits)
        total += c * t_cur
    return total


def verify_enclosure(p: RationalExpansion, x, enc: RealInterval,
                     limits: OracleLimits | None = None) -> bool:
    return iv_contains(enc, exact_clenshaw(p, x, limits))
