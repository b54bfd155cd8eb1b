"""Benchmark harness: generate an expansion and points, run every method, aggregate"""
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import pandas as pd

from .compute import evaluate_methods
from .generate import gen_decaying_coeffs, sample_points
from .metrics import median_radius
from .models import BenchConfig, ChebExpansion, Status
from .report import BenchReport, build_report

logger = logging.getLogger(__name__)

THREADS_ENV = "CHEB_ENCLOSE_THREADS"


def resolve_workers(requested: int | None = None) -> int:
    """Worker count: requested (or cpu count), capped by CHEB_ENCLOSE_THREADS"""
    workers = requested or os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            cap_n = int(cap)
        except ValueError:
            logger.warning("ignoring %s=%r: not an integer", THREADS_ENV, cap)
        else:
            if cap_n >= 1:
                workers = min(workers, cap_n)
            else:
                logger.warning("ignoring %s=%r: must be >= 1", THREADS_ENV, cap)
    return max(1, workers)


def _evaluate_chunk(p: ChebExpansion, points, methods, repeats):
    # runs inside the worker so timings are measured where the evaluation ran
    return [(pt, evaluate_methods(p, pt.x, methods, repeats)) for pt in points]


def _chunks(items: list, n: int) -> list:
    size = max(1, -(-len(items) // n))
    return [items[i:i + size] for i in range(0, len(items), size)]


def run_benchmark(config: BenchConfig) -> BenchReport:
    """
    Evaluate one synthetic expansion at config.num_points intervals with each
    selected method. Method failures become record statuses; the run never aborts.
    """
    p = gen_decaying_coeffs(config.degree, config.decay_rho, config.coeff_radius, config.seed)
    points = sample_points(config.num_points, config.point_radius, config.boundary_bias, config.seed)
    workers = min(resolve_workers(config.workers), len(points))
    logger.info("benchmark: degree=%d points=%d methods=%s workers=%d",
                config.degree, len(points), ",".join(str(m) for m in config.methods), workers)

    if workers == 1:
        evaluated = _evaluate_chunk(p, points, config.methods, config.repeats)
    else:
        evaluated = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_evaluate_chunk, p, chunk, config.methods, config.repeats)
                for chunk in _chunks(points, workers)
            ]
            for fut in futures:
                evaluated.extend(fut.result())
                logger.debug("benchmark: %d/%d points done", len(evaluated), len(points))

    report = build_report(config, evaluated)
    for row in report.aggregates.itertuples():
        if row.degenerate or row.domain or row.error:
            logger.info("%s: %d degenerate, %d domain, %d error", row.method, row.degenerate, row.domain, row.error)
    return report


def degree_sweep(config: BenchConfig, degrees) -> pd.DataFrame:
    """
    Repeat the benchmark at several degrees (same seed, so the same points).

    Returns one row per (degree, method): median radius, unbounded count,
    degenerate count and median seconds per evaluation.
    """
    rows = []
    for degree in degrees:
        report = run_benchmark(replace(config, degree=int(degree)))
        for method in config.methods:
            sub = report.records[report.records["method"] == str(method)]
            rows.append({
                "degree": int(degree),
                "method": str(method),
                "median_radius": median_radius(sub["radius"]),
                "unbounded": int((sub["status"] == Status.UNBOUNDED.value).sum()),
                "degenerate": int((sub["status"] == Status.DEGENERATE.value).sum()),
                "median_seconds": float(sub["elapsed_ns"].median()) / 1e9,
            })
    return pd.DataFrame(rows, columns=["degree", "method", "median_radius", "unbounded", "degenerate", "median_seconds"])
