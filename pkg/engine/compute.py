import logging
from dataclasses import replace
from statistics import median
from time import perf_counter_ns

from .errors import DomainError, EigDegenerate, EnclosureError
from .evaluate import METHOD_FUNCS
from .intervals import RealInterval
from .models import ALL_METHODS, ChebExpansion, EnclosureResult, Method, Status

logger = logging.getLogger(__name__)


def _failed(method: Method, status: Status, start_ns: int, exc: Exception) -> EnclosureResult:
    return EnclosureResult(
        method=method, value=None, elapsed_ns=perf_counter_ns() - start_ns,
        status=status, detail=str(exc),
    )


def evaluate_one(p: ChebExpansion, x: RealInterval, method: Method) -> EnclosureResult:
    """Run one method, turning numerical failures into a status instead of raising"""
    method = Method(method)
    start = perf_counter_ns()
    try:
        return METHOD_FUNCS[method](p, x)
    except DomainError as exc:
        return _failed(method, Status.DOMAIN, start, exc)
    except EigDegenerate as exc:
        return _failed(method, Status.DEGENERATE, start, exc)
    except EnclosureError as exc:
        logger.warning("%s failed at %s: %s", method.value, x, exc)
        return _failed(method, Status.ERROR, start, exc)


def evaluate_methods(p: ChebExpansion, x: RealInterval, methods=ALL_METHODS,
                     repeats: int = 1) -> list[EnclosureResult]:
    """
    Evaluate p at x with each method.

    Args:
        p: expansion to enclose
        x: evaluation interval
        methods: method ids, evaluated in the given order
        repeats: timed repetitions per method; elapsed_ns is their median

    Returns:
        One EnclosureResult per method
    """
    results = []
    for method in methods:
        res = evaluate_one(p, x, method)
        if repeats > 1:
            timings = [res.elapsed_ns]
            timings += [evaluate_one(p, x, method).elapsed_ns for _ in range(repeats - 1)]
            res = replace(res, elapsed_ns=int(median(timings)))
        results.append(res)
    return results
