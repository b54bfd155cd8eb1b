#!/usr/bin/env python3
"""
Command-line front end for validated Chebyshev expansion evaluation.

    python app.py eval coeffs.txt --x 0.5
    python app.py bench --degree 8192 --points 1000 --coeff-radius 2e-15 --point-radius 1e-15
    python app.py compare a.csv b.csv
    python app.py sweep --degrees 64,256,1024,4096 --points 20

Exit codes: 0 success, 2 file/parse/flag error, 3 every requested method failed.
"""
import argparse
import logging
import sys

from engine.bench import degree_sweep, run_benchmark
from engine.compute import evaluate_methods
from engine.errors import CoefficientFileError, ConfigError, ResultFileError
from engine.fileio import format_result_csv, read_coefficient_file, read_result_csv, write_coefficient_file
from engine.generate import gen_decaying_coeffs
from engine.intervals import RealInterval, iv_from_string
from engine.metrics import win_counts
from engine.models import FAILED_STATUSES, PRESETS, PointSample, config_from_preset, parse_methods
from engine.report import format_aggregate_table, records_frame, report_to_csv, report_to_json, write_report_xlsx

logger = logging.getLogger("chebenclose")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ALL_FAILED = 3


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _write_text(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def parse_point(args) -> RealInterval:
    if args.interval:
        lo = iv_from_string(args.interval[0])
        hi = iv_from_string(args.interval[1])
        if lo.inf > hi.sup:
            raise ValueError(f"interval inf {args.interval[0]} exceeds sup {args.interval[1]}")
        x = RealInterval(lo.inf, hi.sup)
    else:
        x = iv_from_string(args.x)
    if not x.is_finite:
        raise ValueError(f"evaluation point overflows binary64: {x}")
    return x


def cmd_eval(args) -> int:
    try:
        p = read_coefficient_file(args.coeffs)
    except OSError as exc:
        return _fail(f"cannot read {args.coeffs}: {exc}")
    except CoefficientFileError as exc:
        return _fail(f"{args.coeffs}: {exc}")
    try:
        x = parse_point(args)
        methods = parse_methods(args.methods)
    except ValueError as exc:
        return _fail(str(exc))

    results = evaluate_methods(p, x, methods, repeats=args.repeats)
    records = records_frame([(PointSample(point_id=0, x=x), results)])
    sys.stdout.write(format_result_csv(records, hex=args.hex))
    for res in results:
        if res.status in FAILED_STATUSES:
            logger.warning("%s: %s (%s)", res.method, res.status, res.detail)
    if all(res.status in FAILED_STATUSES for res in results):
        return EXIT_ALL_FAILED
    return EXIT_OK


def _bench_config(args):
    return config_from_preset(
        args.preset,
        degree=args.degree,
        num_points=args.points,
        decay_rho=args.rho,
        coeff_radius=args.coeff_radius,
        point_radius=args.point_radius,
        seed=args.seed,
        methods=parse_methods(args.methods) if args.methods else None,
        boundary_bias=args.boundary_bias,
        repeats=args.repeats,
        workers=args.workers,
    )


def cmd_bench(args) -> int:
    try:
        cfg = _bench_config(args)
    except ConfigError as exc:
        return _fail(str(exc))
    if args.format == "xlsx" and not args.out:
        return _fail("--format xlsx needs --out PATH")

    if args.write_coeffs:
        p = gen_decaying_coeffs(cfg.degree, cfg.decay_rho, cfg.coeff_radius, cfg.seed)
        try:
            write_coefficient_file(p, args.write_coeffs, hex=True)
        except OSError as exc:
            return _fail(f"cannot write {args.write_coeffs}: {exc}")

    report = run_benchmark(cfg)
    try:
        if args.format == "csv":
            _write_text(report_to_csv(report, hex=args.hex), args.out)
        elif args.format == "json":
            _write_text(report_to_json(report) + "\n", args.out)
        else:
            write_report_xlsx(report, args.out)
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}")
    print(format_aggregate_table(report.aggregates), file=sys.stderr)
    return EXIT_OK


def cmd_compare(args) -> int:
    try:
        a = read_result_csv(args.file_a)
        b = read_result_csv(args.file_b)
    except OSError as exc:
        return _fail(str(exc))
    except ResultFileError as exc:
        return _fail(str(exc))

    ids_a, ids_b = set(a["point_id"]), set(b["point_id"])
    if ids_a != ids_b:
        only = sorted(ids_a ^ ids_b)
        return _fail(f"point_id sets differ ({len(only)} ids in only one file, first: {only[:5]})")

    merged = a.merge(b, on=["point_id", "method"], how="outer", suffixes=("_a", "_b"), indicator="side")
    both = merged[merged["side"] == "both"]

    lines = [f"{'method':<20}{'wins_a':>8}{'wins_b':>8}{'ties':>8}"]
    for method, sub in both.groupby("method", sort=False):
        wa, wb, ties = win_counts(sub["radius_a"], sub["radius_b"])
        lines.append(f"{method:<20}{wa:>8}{wb:>8}{ties:>8}")

    mismatches = []
    for row in merged.itertuples():
        if row.side != "both":
            side = "a" if row.side == "left_only" else "b"
            mismatches.append(f"{row.point_id} {row.method}: only in {side}")
        elif row.status_a != row.status_b:
            mismatches.append(f"{row.point_id} {row.method}: status {row.status_a} vs {row.status_b}")
    lines.append(f"mismatches: {len(mismatches)}")
    lines += [f"  {m}" for m in mismatches]
    print("\n".join(lines))
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        degrees = [int(d) for d in args.degrees.split(",") if d.strip()]
        cfg = _bench_config(args)
    except ValueError as exc:
        return _fail(str(exc))
    if not degrees or min(degrees) < 0:
        return _fail("--degrees needs a comma separated list of nonnegative integers")
    table = degree_sweep(cfg, degrees)
    try:
        _write_text(table.to_csv(index=False, lineterminator="\n"), args.out)
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}")
    return EXIT_OK


def _add_bench_flags(sp):
    sp.add_argument("--preset", choices=sorted(PRESETS), default="default")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--points", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--rho", type=float, help="coefficient decay base (> 1)")
    sp.add_argument("--coeff-radius", type=float)
    sp.add_argument("--point-radius", type=float)
    sp.add_argument("--boundary-bias", type=float, help="fraction of points with |x| > 0.99")
    sp.add_argument("--methods", help="comma separated method ids or 'all'")
    sp.add_argument("--repeats", type=int, help="timing repetitions per evaluation (median kept)")
    sp.add_argument("--workers", type=int, help="process pool size (capped by CHEB_ENCLOSE_THREADS)")
    sp.add_argument("--out", help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chebenclose", description=__doc__.strip().splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="enclose an expansion from a coefficient file at one point")
    sp.add_argument("coeffs", help="coefficient file")
    where = sp.add_mutually_exclusive_group(required=True)
    where.add_argument("--x", help="evaluation point (decimal converted outward, or hex float)")
    where.add_argument("--interval", nargs=2, metavar=("INF", "SUP"))
    sp.add_argument("--methods", default="all")
    sp.add_argument("--repeats", type=int, default=1)
    sp.add_argument("--hex", action="store_true", help="append hex-float columns")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("bench", help="run the randomized benchmark")
    _add_bench_flags(sp)
    sp.add_argument("--format", choices=["csv", "json", "xlsx"], default="csv")
    sp.add_argument("--hex", action="store_true")
    sp.add_argument("--write-coeffs", metavar="PATH", help="also save the generated expansion (hex)")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("compare", help="win counts between two result CSVs")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("sweep", help="median radius and time per method over several degrees")
    _add_bench_flags(sp)
    sp.add_argument("--degrees", default="64,256,1024,4096")
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
