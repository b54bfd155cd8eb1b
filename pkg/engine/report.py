"""Benchmark report tables and exports"""
import json
import math
from dataclasses import asdict, dataclass

import pandas as pd

from .fileio import RESULT_COLUMNS, format_result_csv
from .metrics import mean_correct_digits, median_radius
from .models import BenchConfig, EnclosureResult, PointSample, Status

AGGREGATE_COLUMNS = [
    "method", "mean_correct_digits", "excluded", "median_radius", "total_seconds",
    "ok", "unbounded", "degenerate", "domain", "error",
]


@dataclass
class BenchReport:
    config: BenchConfig
    records: pd.DataFrame      # one row per (point, method), RESULT_COLUMNS
    aggregates: pd.DataFrame   # one row per method, AGGREGATE_COLUMNS


def records_frame(evaluated) -> pd.DataFrame:
    """Flatten [(PointSample, [EnclosureResult, ...]), ...] into ResultCSV rows"""
    rows = []
    for point, results in evaluated:
        for res in results:
            value = res.value
            rows.append({
                "point_id": point.point_id,
                "x_inf": point.x.inf,
                "x_sup": point.x.sup,
                "method": str(res.method),
                "enc_inf": value.inf if value is not None else math.nan,
                "enc_sup": value.sup if value is not None else math.nan,
                "radius": res.radius,
                "elapsed_ns": int(res.elapsed_ns),
                "status": str(res.status),
            })
    return pd.DataFrame(rows, columns=RESULT_COLUMNS)


def aggregate(records: pd.DataFrame, methods) -> pd.DataFrame:
    """Per-method digits, median radius, total time and status counts"""
    rows = []
    for method in methods:
        sub = records[records["method"] == str(method)]
        digits, excluded = mean_correct_digits(sub["radius"])
        counts = sub["status"].value_counts()
        row = {
            "method": str(method),
            "mean_correct_digits": digits,
            "excluded": excluded,
            "median_radius": median_radius(sub["radius"]),
            "total_seconds": sub["elapsed_ns"].sum() / 1e9,
        }
        for status in Status:
            row[status.value] = int(counts.get(status.value, 0))
        rows.append(row)
    return pd.DataFrame(rows, columns=AGGREGATE_COLUMNS)


def build_report(config: BenchConfig, evaluated: list[tuple[PointSample, list[EnclosureResult]]]) -> BenchReport:
    evaluated = sorted(evaluated, key=lambda item: item[0].point_id)
    records = records_frame(evaluated)
    return BenchReport(config=config, records=records, aggregates=aggregate(records, config.methods))


def config_dict(config: BenchConfig) -> dict:
    d = asdict(config)
    d["methods"] = [str(m) for m in config.methods]
    return d


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None if math.isnan(v) else ("inf" if v > 0 else "-inf")
    if hasattr(v, "item"):
        return _json_value(v.item())
    return v


def _json_rows(df: pd.DataFrame) -> list:
    return [{k: _json_value(v) for k, v in row.items()} for row in df.to_dict(orient="records")]


def report_to_json(report: BenchReport) -> str:
    """Non-finite floats become the strings "inf"/"-inf", NaN becomes null"""
    payload = {
        "config": config_dict(report.config),
        "records": _json_rows(report.records),
        "aggregates": _json_rows(report.aggregates),
    }
    return json.dumps(payload, indent=2)


def report_to_csv(report: BenchReport, hex: bool = False) -> str:
    return format_result_csv(report.records, hex=hex)


def write_report_xlsx(report: BenchReport, path):
    """Workbook with records, aggregates and config sheets"""
    config_rows = pd.DataFrame(
        [(k, str(v)) for k, v in config_dict(report.config).items()], columns=["field", "value"]
    )
    with pd.ExcelWriter(path, engine="xlsxwriter") as xw:
        report.records.to_excel(xw, sheet_name="records", index=False)
        report.aggregates.to_excel(xw, sheet_name="aggregates", index=False)
        config_rows.to_excel(xw, sheet_name="config", index=False)


def format_aggregate_table(aggregates: pd.DataFrame) -> str:
    table = aggregates[["method", "mean_correct_digits", "excluded", "median_radius", "total_seconds"]].copy()
    table["mean_correct_digits"] = table["mean_correct_digits"].map(lambda v: f"{v:.2f}")
    table["median_radius"] = table["median_radius"].map(lambda v: f"{v:.3e}")
    table["total_seconds"] = table["total_seconds"].map(lambda v: f"{v:.3f}")
    return table.to_string(index=False)
