"""Test the map from [-1, 1] onto the unit half-circle and the eigenvector condition number"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import math
import random
from fractions import Fraction

import pytest

from engine.errors import DomainError
from engine.intervals import ONE, RealInterval, iv_add, iv_contains, iv_sqr
from engine.joukowski import clip_to_domain, eigenvector_condition, one_minus_square, to_unit_circle


def iv(a, b=None):
    return RealInterval(a, a if b is None else b)


def test_to_unit_circle_examples():
    z = to_unit_circle(iv(0.0))
    assert iv_contains(z.re, 0.0) and iv_contains(z.im, 1.0)

    z = to_unit_circle(iv(1.0))
    assert z.re == iv(1.0), "x = 1 maps exactly to z = 1"
    assert z.im == iv(0.0)

    z = to_unit_circle(iv(-1.0))
    assert z.re == iv(-1.0) and z.im == iv(0.0)

    z = to_unit_circle(iv(0.5))
    assert iv_contains(z.re, 0.5)
    # sqrt(3)/2 is irrational: check r.inf^2 <= 3/4 <= r.sup^2
    assert Fraction(z.im.inf) ** 2 <= Fraction(3, 4) <= Fraction(z.im.sup) ** 2


def test_to_unit_circle_clips_to_domain():
    z = to_unit_circle(iv(0.5, 3.0))
    assert z.re == iv(0.5, 1.0)
    with pytest.raises(DomainError):
        to_unit_circle(iv(2.0, 3.0))
    with pytest.raises(DomainError):
        clip_to_domain(iv(-5.0, -1.5))


def test_image_meets_unit_circle():
    """re^2 + im^2 must contain 1 for every thin point"""
    rng = random.Random(17)
    for _ in range(500):
        x = iv(rng.uniform(-1.0, 1.0))
        z = to_unit_circle(x)
        norm = iv_add(iv_sqr(z.re), iv_sqr(z.im))
        assert iv_contains(norm, 1), f"|z|^2 = {norm} at x = {x.inf}"


def test_one_minus_square_near_boundary():
    x = iv(math.nextafter(1.0, 0.0))
    r = one_minus_square(x)
    exact = 1 - Fraction(x.inf) ** 2
    assert iv_contains(r, exact)
    assert r.inf > 0.0, "(1 - x)(1 + x) keeps the value away from zero"
    assert one_minus_square(ONE) == iv(0.0)


def test_eigenvector_condition_examples():
    assert eigenvector_condition(0.0) == pytest.approx(1.0)
    assert eigenvector_condition(0.8) == pytest.approx(3.0)
    assert eigenvector_condition(-0.8) == pytest.approx(3.0)
    assert eigenvector_condition(0.99) > 10.0
    for bad in (1.0, -1.0, 1.5):
        with pytest.raises(DomainError):
            eigenvector_condition(bad)


def test_eigenvector_condition_grows_toward_boundary():
    values = [eigenvector_condition(x) for x in (0.0, 0.5, 0.9, 0.99, 0.999999)]
    assert values == sorted(values)
    assert values[-1] > 1e3
