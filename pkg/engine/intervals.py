"""Outward-rounded real and rectangular complex interval arithmetic.

Endpoints are binary64 floats. Sums and differences are rounded outward only
when inexact (TwoSum error test); products, quotients and square roots are
widened by one ulp with math.nextafter. Overflow saturates to +-inf. Nothing
here touches the floating-point environment, so every function is safe to call
from any thread.
"""
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import (
    DivisionByZeroInterval, EmptyIntersection, InvalidInterval, NegativeSqrt,
)

MAX_FLOAT = sys.float_info.max
INF = math.inf


@dataclass(frozen=True)
class RealInterval:
    inf: float
    sup: float

    def __post_init__(self):
        lo, hi = self.inf, self.sup
        if lo != lo or hi != hi:
            raise InvalidInterval(f"NaN endpoint in [{lo}, {hi}]")
        if lo > hi:
            raise InvalidInterval(f"inf > sup in [{lo}, {hi}]")
        if lo == INF or hi == -INF:
            raise InvalidInterval(f"empty saturated interval [{lo}, {hi}]")

    @property
    def radius(self) -> float:
        return iv_radius(self)

    @property
    def mid(self) -> float:
        return iv_mid(self)

    @property
    def is_thin(self) -> bool:
        return self.inf == self.sup

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.inf) and math.isfinite(self.sup)

    def __contains__(self, v) -> bool:
        return iv_contains(self, v)

    def __add__(self, other):
        return iv_add(self, _coerce(other))

    def __radd__(self, other):
        return iv_add(_coerce(other), self)

    def __sub__(self, other):
        return iv_sub(self, _coerce(other))

    def __rsub__(self, other):
        return iv_sub(_coerce(other), self)

    def __mul__(self, other):
        return iv_mul(self, _coerce(other))

    def __rmul__(self, other):
        return iv_mul(_coerce(other), self)

    def __truediv__(self, other):
        return iv_div(self, _coerce(other))

    def __neg__(self):
        return iv_neg(self)

    def __str__(self):
        return f"[{self.inf!r}, {self.sup!r}]"


@dataclass(frozen=True)
class ComplexInterval:
    """Axis-aligned rectangle {a + bi : a in re, b in im}"""
    re: RealInterval
    im: RealInterval

    def __add__(self, other):
        return cx_add(self, other)

    def __sub__(self, other):
        return cx_sub(self, other)

    def __mul__(self, other):
        return cx_mul(self, other)

    def __str__(self):
        return f"{self.re} + i{self.im}"


ZERO = RealInterval(0.0, 0.0)
ONE = RealInterval(1.0, 1.0)
UNIT = RealInterval(-1.0, 1.0)


def _coerce(v) -> RealInterval:
    if isinstance(v, RealInterval):
        return v
    return iv_from_float(float(v))


# --- directed rounding helpers -------------------------------------------------

def _widen_down(v: float) -> float:
    if v == INF:
        return MAX_FLOAT
    if v == -INF:
        return v
    return math.nextafter(v, -INF)


def _widen_up(v: float) -> float:
    if v == -INF:
        return -MAX_FLOAT
    if v == INF:
        return v
    return math.nextafter(v, INF)


def _sum_down(x: float, y: float) -> float:
    """x + y rounded toward -inf"""
    s = x + y
    if s != s:
        return -INF
    if s == INF or s == -INF:
        if s > 0 and math.isfinite(x) and math.isfinite(y):
            return MAX_FLOAT
        return s
    # TwoSum: err is the exact rounding error of s
    bp = s - x
    err = (x - (s - bp)) + (y - bp)
    return math.nextafter(s, -INF) if err < 0 else s


def _sum_up(x: float, y: float) -> float:
    """x + y rounded toward +inf"""
    s = x + y
    if s != s:
        return INF
    if s == INF or s == -INF:
        if s < 0 and math.isfinite(x) and math.isfinite(y):
            return -MAX_FLOAT
        return s
    bp = s - x
    err = (x - (s - bp)) + (y - bp)
    return math.nextafter(s, INF) if err > 0 else s


def _prod(x: float, y: float) -> float:
    p = x * y
    # endpoint convention 0 * inf = 0
    return 0.0 if p != p else p


def _quot(x: float, y: float, toward: float) -> float:
    q = x / y
    if q != q:
        return toward
    return q


def _is_zero(a: RealInterval) -> bool:
    return a.inf == 0.0 and a.sup == 0.0


# --- construction --------------------------------------------------------------

def iv_from_float(v: float) -> RealInterval:
    """Thin interval [v, v]; a binary64 value is its own exact enclosure."""
    return RealInterval(v, v)


def iv_from_fraction(q: Rational) -> RealInterval:
    """Tightest binary64 interval containing the exact rational q."""
    q = Fraction(q)
    try:
        f = float(q)
    except OverflowError:
        return RealInterval(MAX_FLOAT, INF) if q > 0 else RealInterval(-INF, -MAX_FLOAT)
    if math.isinf(f):
        return RealInterval(MAX_FLOAT, INF) if f > 0 else RealInterval(-INF, -MAX_FLOAT)
    exact = Fraction(f)
    if exact == q:
        return RealInterval(f, f)
    if exact < q:
        return RealInterval(f, math.nextafter(f, INF))
    return RealInterval(math.nextafter(f, -INF), f)


def iv_from_string(text: str) -> RealInterval:
    """
    Parse a number into an enclosing interval.

    Hexadecimal floats ("0x1.8p-1") are taken bit-exactly. Decimal strings are
    read as exact rationals and rounded outward, so "0.1" becomes the two
    floats bracketing one tenth.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty number")
    if "0x" in s.lower():
        try:
            v = float.fromhex(s)
        except OverflowError as exc:
            raise ValueError(f"number overflows binary64: {text!r}") from exc
        if v != v or math.isinf(v):
            raise ValueError(f"non-finite number: {text!r}")
        return RealInterval(v, v)
    try:
        q = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a number: {text!r}") from exc
    return iv_from_fraction(q)


# --- real operations -----------------------------------------------------------

def iv_neg(a: RealInterval) -> RealInterval:
    return RealInterval(-a.sup, -a.inf)


def iv_add(a: RealInterval, b: RealInterval) -> RealInterval:
    return RealInterval(_sum_down(a.inf, b.inf), _sum_up(a.sup, b.sup))


def iv_sub(a: RealInterval, b: RealInterval) -> RealInterval:
    return RealInterval(_sum_down(a.inf, -b.sup), _sum_up(a.sup, -b.inf))


def iv_mul(a: RealInterval, b: RealInterval) -> RealInterval:
    """Min/max over the four endpoint products, each bound widened one ulp."""
    if _is_zero(a) or _is_zero(b):
        return ZERO
    p1 = _prod(a.inf, b.inf)
    p2 = _prod(a.inf, b.sup)
    p3 = _prod(a.sup, b.inf)
    p4 = _prod(a.sup, b.sup)
    return RealInterval(_widen_down(min(p1, p2, p3, p4)), _widen_up(max(p1, p2, p3, p4)))


def iv_sqr(a: RealInterval) -> RealInterval:
    """Enclosure of {u^2 : u in a}, tighter than iv_mul(a, a) when 0 is in a."""
    if _is_zero(a):
        return ZERO
    lo2 = _prod(a.inf, a.inf)
    hi2 = _prod(a.sup, a.sup)
    if a.inf >= 0:
        return RealInterval(max(0.0, _widen_down(lo2)), _widen_up(hi2))
    if a.sup <= 0:
        return RealInterval(max(0.0, _widen_down(hi2)), _widen_up(lo2))
    return RealInterval(0.0, _widen_up(max(lo2, hi2)))


def iv_div(a: RealInterval, b: RealInterval) -> RealInterval:
    if b.inf <= 0.0 <= b.sup:
        raise DivisionByZeroInterval(f"0 in denominator {b}")
    if _is_zero(a):
        return ZERO
    lows = (
        _quot(a.inf, b.inf, -INF), _quot(a.inf, b.sup, -INF),
        _quot(a.sup, b.inf, -INF), _quot(a.sup, b.sup, -INF),
    )
    highs = (
        _quot(a.inf, b.inf, INF), _quot(a.inf, b.sup, INF),
        _quot(a.sup, b.inf, INF), _quot(a.sup, b.sup, INF),
    )
    return RealInterval(_widen_down(min(lows)), _widen_up(max(highs)))


def iv_sqrt(a: RealInterval) -> RealInterval:
    """
    Square root of the nonnegative part of a.

    A lower endpoint slightly below zero is a rounding artifact of quantities
    like 1 - x^2 and is clamped to 0.
    """
    if a.sup < 0:
        raise NegativeSqrt(f"sqrt of negative interval {a}")
    lo = math.sqrt(max(a.inf, 0.0))
    hi = math.sqrt(a.sup)
    lower = 0.0 if lo == 0.0 else max(0.0, math.nextafter(lo, -INF))
    upper = 0.0 if hi == 0.0 else _widen_up(hi)
    return RealInterval(lower, upper)


def iv_intersect(a: RealInterval, b: RealInterval) -> RealInterval:
    lo = max(a.inf, b.inf)
    hi = min(a.sup, b.sup)
    if lo > hi:
        raise EmptyIntersection(f"{a} and {b} are disjoint")
    return RealInterval(lo, hi)


def iv_hull(a: RealInterval, b: RealInterval) -> RealInterval:
    return RealInterval(min(a.inf, b.inf), max(a.sup, b.sup))


def iv_contains(a: RealInterval, v) -> bool:
    """Exact membership test; v may be a float, int or Fraction."""
    if isinstance(v, float) and v != v:
        return False
    return a.inf <= v <= a.sup


def iv_is_subset(a: RealInterval, b: RealInterval) -> bool:
    """True iff a is contained in b"""
    return b.inf <= a.inf and a.sup <= b.sup


def iv_radius(a: RealInterval) -> float:
    """(sup - inf) / 2 rounded upward; +inf for unbounded intervals."""
    if not a.is_finite:
        return INF
    d = _sum_up(a.sup, -a.inf)
    half = d / 2.0
    if half * 2.0 != d:
        half = math.nextafter(half, INF)
    return half


def iv_mid(a: RealInterval) -> float:
    if a.inf == -INF and a.sup == INF:
        return 0.0
    if a.inf == -INF:
        return -MAX_FLOAT
    if a.sup == INF:
        return MAX_FLOAT
    return 0.5 * a.inf + 0.5 * a.sup


# --- complex rectangles --------------------------------------------------------

def cx_from_real(a: RealInterval) -> ComplexInterval:
    return ComplexInterval(a, ZERO)


def cx_conj(a: ComplexInterval) -> ComplexInterval:
    return ComplexInterval(a.re, iv_neg(a.im))


def cx_add(a: ComplexInterval, b: ComplexInterval) -> ComplexInterval:
    return ComplexInterval(iv_add(a.re, b.re), iv_add(a.im, b.im))


def cx_sub(a: ComplexInterval, b: ComplexInterval) -> ComplexInterval:
    return ComplexInterval(iv_sub(a.re, b.re), iv_sub(a.im, b.im))


def cx_mul(a: ComplexInterval, b: ComplexInterval) -> ComplexInterval:
    re = iv_sub(iv_mul(a.re, b.re), iv_mul(a.im, b.im))
    im = iv_add(iv_mul(a.re, b.im), iv_mul(a.im, b.re))
    return ComplexInterval(re, im)
