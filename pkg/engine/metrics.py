import math

import numpy as np


def mean_correct_digits(radii) -> tuple[float, int]:
    """
    Mean of -log10(radius) over the positive finite radii.

    Returns: (mean digits, number of excluded zero/infinite radii); the mean is
    NaN when every radius is excluded.
    """
    r = np.asarray(list(radii), dtype=np.float64)
    keep = np.isfinite(r) & (r > 0)
    excluded = int(r.size - keep.sum())
    if not keep.any():
        return math.nan, excluded
    # math.log10(1e-k) is exactly -k
    digits = [-math.log10(v) for v in r[keep].tolist()]
    return float(np.mean(digits)), excluded


def median_radius(radii) -> float:
    r = np.asarray(list(radii), dtype=np.float64)
    return float(np.median(r)) if r.size else math.nan


def win_counts(radii_a, radii_b) -> tuple[int, int, int]:
    """(a strictly narrower, b strictly narrower, ties) over paired radii"""
    a = np.asarray(list(radii_a), dtype=np.float64)
    b = np.asarray(list(radii_b), dtype=np.float64)
    return int((a < b).sum()), int((b < a).sum()), int((a == b).sum())
