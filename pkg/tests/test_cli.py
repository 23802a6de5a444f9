import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from cellint.cli import main

SCHEMA = json.loads(resources.files("cellint").joinpath("report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    return code, rep


def test_xi_formats(capsys):
    assert run(capsys, "xi", "--l", "2", "--format", "mzv")[1].strip() == "z(2)"
    assert run(capsys, "xi", "--l", "3", "--format", "psi")[1].strip() == "2*p2"
    code, out, _ = run(capsys, "xi", "--l", "4", "--format", "numeric")
    assert code == 0 and "±" in out


def test_xi_json_report(capsys):
    code, rep = run_json(capsys, "xi", "--l", "2", "--format", "all")
    assert code == 0 and rep["pass"]
    o = rep["outputs"]
    assert abs(o["numeric"]["value"] - 1.6449340668) < 1e-6
    assert abs(o["oracle_series"]["value"] - 1.6449340668) < 1e-4
    assert o["psi_form"] == "p2" and o["mzv_form"] == "z(2)"


def test_xi_tsv(capsys):
    code, out, _ = run(capsys, "xi", "--l", "3", "--tsv")
    assert code == 0 and out.startswith("l\t3")


def test_xi_with_mc(capsys):
    code, rep = run_json(capsys, "xi", "--l", "2", "--format", "numeric", "--mc", "--samples", "1e6")
    assert rep["seed"] == 0 and rep["rng"]
    assert "oracle_mc" in rep["outputs"]


def test_usage_errors(capsys):
    assert run(capsys, "xi", "--l", "13")[0] == 2
    assert run(capsys, "xi", "--l", "7", "--format", "numeric")[0] == 2
    assert run(capsys, "xi", "--l", "1")[0] == 2
    assert run(capsys, "xi")[0] == 2
    assert run(capsys, "xi", "--l", "2", "--json", "--tsv")[0] == 2
    assert run(capsys, "oracle", "--l", "2", "--method", "quad")[0] == 2
    assert run(capsys, "oracle", "--l", "2", "--samples", "-5")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "verify", "--lmax", "1")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_verify_beta(capsys):
    code, rep = run_json(capsys, "verify", "--suite", "beta", "--lmax", "10")
    assert code == 0 and rep["pass"]
    assert rep["checks"] == sorted(rep["checks"], key=lambda c: c["id"])


def test_verify_exactness(capsys):
    code, rep = run_json(capsys, "verify", "--suite", "exactness", "--lmax", "7")
    assert code == 0 and rep["pass"]


def test_verify_multiple_suites_table(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "swap", "--suite", "odd-relation", "--quick")
    assert code == 0
    assert "checks passed" in out and "PASS" in out


def test_verify_tsv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "n-count", "--quick", "--tsv")
    assert code == 0
    assert out.splitlines()[0] == "check\tstatus\tresidual\ttol"


def test_verify_failure_exit_code(capsys):
    # Monte Carlo for xi_5 at 10^6 samples, seed 0, sits outside 3 sigma
    code, rep = run_json(capsys, "verify", "--suite", "oracle", "--quick", "--lmax", "5")
    assert code == 1 and not rep["pass"]
    assert any(not c["pass"] for c in rep["checks"])


def test_oracle_series(capsys):
    code, rep = run_json(capsys, "oracle", "--l", "2", "--method", "series")
    assert code == 0 and abs(rep["outputs"]["estimate"] - 1.64493) < 1e-5


def test_oracle_mc_deterministic(capsys):
    a = run_json(capsys, "oracle", "--l", "5", "--method", "mc", "--samples", "1e6", "--seed", "42")[1]
    b = run_json(capsys, "oracle", "--l", "5", "--method", "mc", "--samples", "1e6", "--seed", "42",
                 "--workers", "3")[1]
    assert a["outputs"] == b["outputs"]
    assert a["seed"] == 42 and a["rng"]


def test_oracle_zlobin(capsys):
    code, rep = run_json(capsys, "oracle", "--zlobin", "--l", "3")
    assert code == 0 and abs(rep["outputs"]["estimate"] - 2.4041138) < 1e-6


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "cellint", "xi", "--l", "2", "--format", "mzv"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "z(2)"
    p = subprocess.run([sys.executable, "-m", "cellint", "xi", "--l", "99"], capture_output=True, text=True)
    assert p.returncode == 2 and "error" in p.stderr


def test_version(capsys):
    assert run(capsys, "--version")[0] == 0
