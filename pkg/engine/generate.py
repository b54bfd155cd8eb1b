"""Synthetic expansions and evaluation intervals for benchmarks"""
import math

import numpy as np

from .intervals import UNIT, RealInterval, iv_add, iv_from_float, iv_intersect
from .models import ChebExpansion, PointSample

BOUNDARY = 0.99


def _streams(seed: int):
    """Independent generators for coefficients and points derived from one seed"""
    coeff_seq, point_seq = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(coeff_seq), np.random.default_rng(point_seq)


def inflate(v: float, radius: float) -> RealInterval:
    """[v - radius, v + radius], outward rounded; thin when radius is 0"""
    if radius == 0:
        return iv_from_float(v)
    return iv_add(iv_from_float(v), RealInterval(-radius, radius))


def gen_decaying_coeffs(degree: int, decay_rho: float, coeff_radius: float, seed: int) -> ChebExpansion:
    """
    Random smooth-function profile: c_k = u_k * rho^-k, u_k uniform in [-1, 1],
    then inflated to intervals of radius coeff_radius.
    """
    if not decay_rho > 1.0:
        raise ValueError(f"decay_rho must be > 1, got {decay_rho}")
    rng, _ = _streams(seed)
    u = rng.uniform(-1.0, 1.0, degree + 1)
    scale = np.power(float(decay_rho), -np.arange(degree + 1, dtype=np.float64))
    mids = u * scale
    return ChebExpansion(tuple(inflate(float(m), coeff_radius) for m in mids))


def boundary_count(num_points: int, boundary_bias: float) -> int:
    # round() absorbs float noise such as 0.7 * 10 = 7.000000000000001
    return min(num_points, math.ceil(round(boundary_bias * num_points, 9)))


def sample_points(num_points: int, point_radius: float, boundary_bias: float, seed: int) -> list[PointSample]:
    """
    Random evaluation intervals centred in [-1, 1].

    ceil(boundary_bias * num_points) of the centres satisfy |t| > 0.99; the
    rest are uniform. Every interval is intersected with [-1, 1].
    """
    if num_points < 1:
        raise ValueError(f"num_points must be >= 1, got {num_points}")
    _, rng = _streams(seed)
    n_boundary = boundary_count(num_points, boundary_bias)
    near = rng.uniform(np.nextafter(BOUNDARY, 1.0), 1.0, n_boundary)
    signs = rng.choice(np.array([-1.0, 1.0]), n_boundary)
    interior = rng.uniform(-1.0, 1.0, num_points - n_boundary)
    centres = rng.permutation(np.concatenate([near * signs, interior]))
    return [
        PointSample(point_id=i, x=iv_intersect(inflate(float(t), point_radius), UNIT))
        for i, t in enumerate(centres)
    ]
