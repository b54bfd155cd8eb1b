"""Coefficient files and result CSVs.

Coefficient file:

    chebenclose-coeffs v1 <count>
    m <midpoint> <radius>
    i <inf> <sup>

Numbers are decimal (converted outward) or hexadecimal floats (bit-exact).
Blank lines and lines starting with '#' are ignored.
"""
import io
import logging
import math

import pandas as pd

from .errors import CoefficientFileError, ResultFileError
from .intervals import RealInterval, iv_add, iv_from_string
from .models import ChebExpansion

logger = logging.getLogger(__name__)

COEFF_MAGIC = "chebenclose-coeffs"
COEFF_VERSION = "v1"

RESULT_COLUMNS = [
    "point_id", "x_inf", "x_sup", "method", "enc_inf", "enc_sup", "radius", "elapsed_ns", "status",
]
FLOAT_COLUMNS = ["x_inf", "x_sup", "enc_inf", "enc_sup", "radius"]
HEX_COLUMNS = [f"{c}_hex" for c in FLOAT_COLUMNS]


# --- coefficient files -----------------------------------------------------------

def _parse_number(token: str, line_number: int) -> RealInterval:
    try:
        return iv_from_string(token)
    except ValueError as exc:
        raise CoefficientFileError(str(exc), line_number) from None


def _parse_coeff_line(fields: list, line_number: int) -> RealInterval:
    if len(fields) != 3 or fields[0] not in ("m", "i"):
        raise CoefficientFileError("expected 'm <midpoint> <radius>' or 'i <inf> <sup>'", line_number)
    a = _parse_number(fields[1], line_number)
    b = _parse_number(fields[2], line_number)
    if fields[0] == "m":
        if b.inf < 0:
            raise CoefficientFileError(f"negative radius {fields[2]}", line_number)
        c = iv_add(a, RealInterval(-b.sup, b.sup))
    else:
        if a.inf > b.sup:
            raise CoefficientFileError(f"inf {fields[1]} exceeds sup {fields[2]}", line_number)
        c = RealInterval(a.inf, b.sup)
    if not c.is_finite:
        raise CoefficientFileError(f"coefficient overflows binary64: {' '.join(fields[1:])}", line_number)
    return c


def parse_coefficients(text: str) -> ChebExpansion:
    lines = [
        (n, line.strip()) for n, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise CoefficientFileError("empty coefficient file", 1)
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != COEFF_MAGIC or parts[1] != COEFF_VERSION:
        raise CoefficientFileError(f"bad header {header!r}, expected '{COEFF_MAGIC} {COEFF_VERSION} <count>'", header_no)
    try:
        count = int(parts[2])
    except ValueError:
        raise CoefficientFileError(f"bad coefficient count {parts[2]!r}", header_no) from None
    body = lines[1:]
    if count < 1 or count != len(body):
        raise CoefficientFileError(f"header announces {count} coefficients, found {len(body)}", header_no)
    coeffs = tuple(_parse_coeff_line(line.split(), n) for n, line in body)
    return ChebExpansion(coeffs)


def read_coefficient_file(path) -> ChebExpansion:
    with open(path, encoding="utf-8") as f:
        p = parse_coefficients(f.read())
    logger.info("read %d coefficients from %s", len(p.coeffs), path)
    return p


def format_coefficients(p: ChebExpansion, hex: bool = True) -> str:
    """Serialize as 'i' lines; hex output re-reads bit-exactly"""
    fmt = float.hex if hex else repr
    lines = [f"{COEFF_MAGIC} {COEFF_VERSION} {len(p.coeffs)}"]
    lines += [f"i {fmt(c.inf)} {fmt(c.sup)}" for c in p.coeffs]
    return "\n".join(lines) + "\n"


def write_coefficient_file(p: ChebExpansion, path, hex: bool = True):
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_coefficients(p, hex=hex))


# --- result CSV --------------------------------------------------------------------

def _fmt_float(v) -> str:
    v = float(v)
    return "" if math.isnan(v) else repr(v)


def _fmt_hex(v) -> str:
    v = float(v)
    return "" if math.isnan(v) else v.hex()


def format_result_csv(records: pd.DataFrame, hex: bool = False) -> str:
    """
    Render records as ResultCSV text. Floats use the shortest round-trip decimal;
    hex=True appends *_hex columns.
    """
    out = pd.DataFrame({
        "point_id": records["point_id"].astype(int).astype(str),
        "method": records["method"].astype(str),
        "elapsed_ns": records["elapsed_ns"].astype("int64").astype(str),
        "status": records["status"].astype(str),
    })
    for col in FLOAT_COLUMNS:
        out[col] = records[col].map(_fmt_float)
    columns = list(RESULT_COLUMNS)
    if hex:
        for col, hcol in zip(FLOAT_COLUMNS, HEX_COLUMNS):
            out[hcol] = records[col].map(_fmt_hex)
        columns += HEX_COLUMNS
    buf = io.StringIO()
    out[columns].to_csv(buf, index=False, lineterminator="\n")
    return buf.getvalue()


def write_result_csv(records: pd.DataFrame, path, hex: bool = False):
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(format_result_csv(records, hex=hex))


def _parse_float(text: str, hex_text: str | None) -> float:
    if hex_text:
        return float.fromhex(hex_text)
    return float(text) if text else math.nan


def read_result_csv(path) -> pd.DataFrame:
    """Read a ResultCSV, preferring the *_hex columns when present"""
    try:
        raw = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise ResultFileError(f"{path}: {exc}") from None
    missing = [c for c in RESULT_COLUMNS if c not in raw.columns]
    if missing:
        raise ResultFileError(f"{path}: missing columns {', '.join(missing)}")
    try:
        out = pd.DataFrame({
            "point_id": raw["point_id"].astype(int),
            "method": raw["method"],
            "elapsed_ns": raw["elapsed_ns"].astype("int64"),
            "status": raw["status"],
        })
        for col, hcol in zip(FLOAT_COLUMNS, HEX_COLUMNS):
            hex_values = raw[hcol] if hcol in raw.columns else [None] * len(raw)
            out[col] = [_parse_float(t, h) for t, h in zip(raw[col], hex_values)]
    except ValueError as exc:
        raise ResultFileError(f"{path}: {exc}") from None
    return out[RESULT_COLUMNS]
