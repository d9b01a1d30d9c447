import csv
import io
import json
import subprocess
import sys

import pytest

from arcsl_bounds.bounds_engine import beta_constant
from arcsl_bounds.cli import RECORD_COLUMNS, TABLE_COLUMNS, main

CONSTANT_KEYS = ["alpha", "beta", "arcsl_one", "zeta_3half_quarter", "gamma_quarter", "beta_quarter_half"]


def _run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_arcsl(capsys):
    code, out, _ = _run(["eval", "arcsl", 0.5, "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert abs(data["value"] - 0.503209443177330887) <= data["error_bound"]
    assert data["work"] > 0


def test_eval_lerch_at_zero(capsys):
    code, out, _ = _run(["eval", "lerch", 0, 1.5, 0.25], capsys)
    assert code == 0
    assert "value       = 8.0" in out


@pytest.mark.parametrize(
    "function, args",
    [("hurwitz", [2, 1]), ("gamma", [0.25]), ("beta", [0.25, 0.5]), ("h", [0.5]), ("F", [0.5])],
)
def test_eval_other_functions(function, args, capsys):
    code, out, _ = _run(["--format", "csv", "eval", function, *args], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1
    assert float(rows[0]["error_bound"]) >= 0


def test_eval_domain_error(capsys):
    code, out, err = _run(["eval", "arcsl", 1.5], capsys)
    assert code == 2
    assert out == ""
    assert "[0, 1]" in err and len(err.strip().splitlines()) == 1


def test_eval_arity(capsys):
    code, out, err = _run(["eval", "lerch", 0.5, 2], capsys)
    assert code == 2 and out == "" and "3 argument" in err


def test_eval_work_budget(capsys):
    code, out, err = _run(["eval", "lerch", 0.999999999, 1.0001, 1, "--tol", 1e-13], capsys)
    assert code == 3 and out == "" and "budget" in err


def test_eval_oracle(capsys):
    code, out, _ = _run(["eval", "F", 0.5, "--oracle", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert abs(data["value"] - data["oracle"]["value"]) <= data["error_bound"] + data["oracle"]["error_estimate"]


def test_tol_floor(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "arcsl", "0.5", "--tol", "1e-14"])
    assert exc.value.code == 2


def test_constants_json(capsys):
    code, out, _ = _run(["constants", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert list(data) == CONSTANT_KEYS
    assert data["alpha"]["value"] == 0.125
    for entry in data.values():
        assert set(entry) == {"value", "error_bound"}


def test_constants_text(capsys):
    code, out, _ = _run(["constants"], capsys)
    assert code == 0
    beta_line = next(line for line in out.splitlines() if line.startswith("beta "))
    printed = beta_line.split("=")[1].split()[0]
    assert printed.startswith("0.12836") and len(printed.replace("0.", "", 1)) >= 10
    assert "4*beta = 0.5134" in out


def test_constants_oracle(capsys):
    code, out, _ = _run(["constants", "--oracle"], capsys)
    assert code == 0 and "route spread" in out


def test_verify_sharp_passes(capsys):
    code, out, _ = _run(["verify", "--min", 0.001, "--max", 0.999, "--count", 1000, "--mode", "sharp"], capsys)
    assert code == 0 and "overall: PASS" in out


def test_verify_csv_columns(capsys):
    code, out, _ = _run(["verify", "--count", 5, "--format", "csv"], capsys)
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == ",".join(RECORD_COLUMNS)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5
    for row in rows:
        assert float(row["lower"]) < float(row["arcsl"]) < float(row["upper"])
        assert float(row["lower_margin"]) > 0 and float(row["upper_margin"]) > 0
    assert "\r" not in out


def test_verify_sharpness_witness_exit_1(capsys):
    factor = beta_constant().value - 1e-4
    code, out, _ = _run(
        ["verify", "--min", 0.5, "--max", 1 - 1e-5, "--count", 400, "--spacing", "endpoint-refined",
         "--upper-factor", factor, "--format", "json"],
        capsys,
    )
    data = json.loads(out)
    assert code == 1
    assert not data["passed"] and data["violations"]
    assert all(v["x"] > 0.9 for v in data["violations"])


def test_verify_count_one(capsys):
    code, out, err = _run(["verify", "--count", 1], capsys)
    assert code == 2 and out == "" and "count" in err


def test_verify_count_two_skips_monotonicity(capsys):
    code, out, _ = _run(["verify", "--count", 2, "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["passed"]


def test_verify_oracle(capsys):
    code, out, _ = _run(["verify", "--count", 7, "--oracle", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["oracle_failures"] == []


def test_upper_factor_is_hidden(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--help"])
    out, _ = capsys.readouterr()
    assert "--upper-factor" not in out


def test_table_all_columns(capsys):
    code, out, _ = _run(["table", "--min", 0.25, "--max", 0.75, "--count", 3, "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [float(r["x"]) for r in rows] == [0.25, 0.5, 0.75]
    for r in rows:
        assert float(r["lower"]) < float(r["arcsl"]) < float(r["upper_sharp"]) < float(r["upper_legacy"])
    assert list(rows[0]) == list(TABLE_COLUMNS)


def test_table_json_keys(capsys):
    code, out, _ = _run(["table", "--count", 4, "--columns", "x,F", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and isinstance(data, list) and len(data) == 4
    assert all(list(row) == ["x", "F"] for row in data)


@pytest.mark.parametrize("columns", ["", "x,nope"])
def test_table_bad_columns(columns, capsys):
    code, out, _ = _run(["table", "--columns", columns], capsys)
    assert code == 2 and out == ""


def test_numbers_round_trip(capsys):
    _, out, _ = _run(["table", "--count", 11, "--format", "json", "--columns", "arcsl"], capsys)
    for row in json.loads(out):
        assert repr(row["arcsl"]) in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "arcsl_bounds", "table", "--count", 25, "--format", "csv"]
    runs = [subprocess.run([str(c) for c in cmd], capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]
