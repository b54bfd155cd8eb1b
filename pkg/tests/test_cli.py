"""Test the command-line front end end to end"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import io
import json

import pandas as pd
import pytest
from openpyxl import load_workbook

from app import main
from engine.fileio import write_result_csv

BENCH_SMALL = ["bench", "--points", "1", "--methods", "laurent_horner", "--degree", "8",
               "--repeats", "1", "--workers", "1"]


def write_coeffs(tmp_path, text, name="coeffs.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def read_stdout_csv(text):
    return pd.read_csv(io.StringIO(text))


def test_eval_constant(tmp_path, capsys):
    path = write_coeffs(tmp_path, "chebenclose-coeffs v1 1\nm 1 0\n")
    assert main(["eval", path, "--x", "0.5"]) == 0
    out = read_stdout_csv(capsys.readouterr().out)
    assert len(out) == 4
    assert (out["status"] == "ok").all()
    assert ((out["enc_inf"] <= 1.0) & (out["enc_sup"] >= 1.0)).all()


def test_eval_interval_and_hex(tmp_path, capsys):
    path = write_coeffs(tmp_path, "chebenclose-coeffs v1 2\nm 0 0\nm 1 0\n")
    assert main(["eval", path, "--interval", "-0.5", "0.25", "--methods", "clenshaw_interval", "--hex"]) == 0
    out = read_stdout_csv(capsys.readouterr().out)
    assert list(out["method"]) == ["clenshaw_interval"]
    assert float.fromhex(out["x_inf_hex"][0]) == -0.5
    assert out["enc_inf"][0] <= -0.5 and out["enc_sup"][0] >= 0.25


def test_eval_malformed_header(tmp_path, capsys):
    path = write_coeffs(tmp_path, "coefficients please\nm 1 0\n")
    assert main(["eval", path, "--x", "0.5"]) == 2
    assert "line 1" in capsys.readouterr().err


def test_eval_missing_file(tmp_path):
    assert main(["eval", str(tmp_path / "nope.txt"), "--x", "0.5"]) == 2


def test_eval_all_methods_fail(tmp_path, capsys):
    path = write_coeffs(tmp_path, "chebenclose-coeffs v1 1\nm 1 0\n")
    assert main(["eval", path, "--x", "1.5", "--methods", "laurent_horner"]) == 3
    out = read_stdout_csv(capsys.readouterr().out)
    assert list(out["status"]) == ["domain"]


def test_eval_unknown_method(tmp_path):
    path = write_coeffs(tmp_path, "chebenclose-coeffs v1 1\nm 1 0\n")
    assert main(["eval", path, "--x", "0.5", "--methods", "horner"]) == 2


@pytest.mark.parametrize("line", ["m 1e400 0", "m 0x1p2000 0", "m 1e308 1e308", "i 0 1e400"])
def test_eval_overflowing_coefficient(tmp_path, capsys, line):
    path = write_coeffs(tmp_path, f"chebenclose-coeffs v1 2\nm 1 0\n{line}\n")
    assert main(["eval", path, "--x", "0.5"]) == 2
    assert "line 3" in capsys.readouterr().err


@pytest.mark.parametrize("where", [["--x", "0x1p2000"], ["--x", "1e400"], ["--interval", "0", "1e400"]])
def test_eval_overflowing_point(tmp_path, capsys, where):
    path = write_coeffs(tmp_path, "chebenclose-coeffs v1 1\nm 1 0\n")
    assert main(["eval", path] + where) == 2
    assert "overflows" in capsys.readouterr().err


@pytest.mark.parametrize("extra", [
    ["--out", "missing/results.csv"],
    ["--format", "json", "--out", "missing/results.json"],
    ["--format", "xlsx", "--out", "missing/results.xlsx"],
    ["--write-coeffs", "missing/coeffs.txt"],
])
def test_bench_unwritable_output(tmp_path, capsys, extra):
    extra = [str(tmp_path / e) if e.startswith("missing/") else e for e in extra]
    assert main(BENCH_SMALL + extra) == 2
    assert "cannot write" in capsys.readouterr().err


def test_sweep_unwritable_output(tmp_path, capsys):
    args = ["sweep", "--degrees", "4", "--points", "1", "--methods", "laurent_horner", "--workers", "1",
            "--out", str(tmp_path / "missing" / "sweep.csv")]
    assert main(args) == 2
    assert "cannot write" in capsys.readouterr().err


def test_bench_single_row(capsys):
    assert main(BENCH_SMALL) == 0
    out = read_stdout_csv(capsys.readouterr().out)
    assert len(out) == 1
    assert out["method"][0] == "laurent_horner"


def test_bench_is_deterministic(capsys):
    main(BENCH_SMALL + ["--points", "5", "--coeff-radius", "2e-15"])
    first = read_stdout_csv(capsys.readouterr().out)
    main(BENCH_SMALL + ["--points", "5", "--coeff-radius", "2e-15"])
    second = read_stdout_csv(capsys.readouterr().out)
    pd.testing.assert_frame_equal(first.drop(columns=["elapsed_ns"]), second.drop(columns=["elapsed_ns"]))


def test_bench_bad_flag_value(capsys):
    assert main(BENCH_SMALL + ["--rho", "0.5"]) == 2
    assert "decay_rho" in capsys.readouterr().err


def test_bench_json_and_coefficients(tmp_path, capsys):
    out_path = tmp_path / "run.json"
    coeff_path = tmp_path / "gen.txt"
    assert main(BENCH_SMALL + ["--format", "json", "--out", str(out_path), "--write-coeffs", str(coeff_path)]) == 0
    payload = json.loads(out_path.read_text())
    assert len(payload["records"]) == 1
    assert payload["config"]["degree"] == 8
    assert coeff_path.read_text().startswith("chebenclose-coeffs v1 9")


def test_bench_xlsx(tmp_path):
    path = tmp_path / "run.xlsx"
    assert main(BENCH_SMALL + ["--format", "xlsx", "--out", str(path)]) == 0
    wb = load_workbook(path)
    assert wb.sheetnames == ["records", "aggregates", "config"]
    assert wb["records"].max_row == 2


def _records(radii, status="ok"):
    return pd.DataFrame({
        "point_id": list(range(len(radii))),
        "x_inf": [0.5] * len(radii),
        "x_sup": [0.5] * len(radii),
        "method": ["laurent_horner"] * len(radii),
        "enc_inf": [0.0] * len(radii),
        "enc_sup": [1.0] * len(radii),
        "radius": radii,
        "elapsed_ns": [100] * len(radii),
        "status": [status] * len(radii),
    })


def test_compare(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_result_csv(_records([1e-12, 1e-12, 1e-12]), a)
    write_result_csv(_records([1e-9, 1e-9, 1e-9]), b)

    assert main(["compare", str(a), str(a)]) == 0
    out = capsys.readouterr().out
    assert "laurent_horner" in out and "mismatches: 0" in out
    row = [line.split() for line in out.splitlines() if line.startswith("laurent_horner")][0]
    assert row[1:] == ["0", "0", "3"]

    assert main(["compare", str(a), str(b)]) == 0
    row = [line.split() for line in capsys.readouterr().out.splitlines() if line.startswith("laurent_horner")][0]
    assert row[1:] == ["3", "0", "0"]


def test_compare_disjoint_points(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_result_csv(_records([1e-12]), a)
    other = _records([1e-12, 1e-12])
    write_result_csv(other[other["point_id"] == 1], b)
    assert main(["compare", str(a), str(b)]) == 2
    assert "point_id" in capsys.readouterr().err


def test_sweep(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--degrees", "8,16", "--points", "3", "--methods", "laurent_horner,clenshaw_interval",
                 "--repeats", "1", "--workers", "1", "--out", str(out)]) == 0
    table = pd.read_csv(out)
    assert len(table) == 4
    assert set(table["degree"]) == {8, 16}
