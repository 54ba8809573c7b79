import json
import subprocess
import sys

import pytest

from qharmonic.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "3", "2")
    assert code == EXIT_OK
    assert out.strip() == "dim A_m = 6, dim H_m = 5"


def test_json_before_or_after(capsys):
    for argv in (["--json", "dims", "4", "2"], ["dims", "4", "2", "--json"]):
        code, out, _ = run(capsys, *argv)
        assert code == EXIT_OK
        assert json.loads(out) == {"N": 4, "m": 2, "dim_A": 10, "dim_H": 9}


def test_eval(capsys):
    assert run(capsys, "eval", "(1-q^2)/(1-q)", "--t0", "1")[1].strip() == "2"
    assert run(capsys, "eval", "q^(1/2)", "--t0", "3/2")[1].strip() == "3/2"
    code, _, err = run(capsys, "eval", "1/(1-q)", "--t0", "1")
    assert code == EXIT_USAGE and "error" in err


def test_project_and_zonal(capsys):
    code, out, _ = run(capsys, "project", "3", "x1 x3")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "zonal", "4", "1", "1")
    assert out.strip() == "(q^2/(1 + q^2)) x1 x4 - (q/(1 + q^2)) x2 x3"
    code, out, _ = run(capsys, "--json", "tpoly", "4", "2", "1", "1", "0")
    assert json.loads(out)["N"] == 4


def test_basis_gram_inner(capsys):
    code, out, _ = run(capsys, "basis", "3", "1")
    assert code == EXIT_OK and len(out.strip().splitlines()) == 3
    code, out, _ = run(capsys, "--json", "gram", "3", "1")
    data = json.loads(out)
    assert len(data["rows"]) == 3 and len(data["labels"]) == 3
    code, out, _ = run(capsys, "inner", "3", "x1", "x1")
    assert out.strip() == "q/(1 + q + q^2)"


@pytest.mark.parametrize("argv", [
    ["dims", "1", "2"],
    ["project", "3", "x1 +"],
    ["project", "3", "x4"],
    ["project", "3", "x1 + x1 x2"],
    ["inner", "3", "x1", "x9"],
    ["tpoly", "4", "1", "1", "1", "0"],
    ["verify", "nonsense"],
    ["verify", "sphere", "--N", "2..3"],
    ["verify", "sphere", "--N", "5..3"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_parse_range():
    assert parse_range("3..5") == [3, 4, 5]
    assert parse_range("3,5") == [3, 5]
    assert parse_range("4") == [4]


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "laplace-equivalence", "--N", "3..4", "--deg", "3")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1].endswith("cells passed")
    code, out, _ = run(capsys, "--json", "verify", "sphere", "--N", "3", "--deg", "2")
    rep = json.loads(out)
    assert rep["suite"] == "sphere" and all(c["ok"] for c in rep["cells"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    from qharmonic import verify
    monkeypatch.setitem(verify.SUITES, "broken", lambda seed, **kw: {"suite": "broken", "cells": [verify._cell("x", False, "bad")]})
    assert run(capsys, "verify", "broken")[0] == EXIT_FAIL


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "qharmonic.cli", "dims", "5", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "dim A_m = 35, dim H_m = 30"
