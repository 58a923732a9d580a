import json
import subprocess
import sys

import pytest

from hecke_reduction.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hecke_poly(capsys):
    code, out, _ = run(capsys, "hecke-poly", "--r", "3", "--n", "1", "--format", "text")
    assert code == 0 and out.strip() == "P_{3,1} = fr^3 - T1*fr^2 + T2*Q*fr - T3*Q^3"
    code, out, _ = run(capsys, "hecke-poly", "--r", "2", "--n", "1", "--format", "json")
    assert json.loads(out)["degree"] == 2


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--r", "2", "--n", "1", "--j", "1")
    assert code == 0 and out.strip() == "T1 = fr + Phi1"


def test_census_csv(capsys):
    code, out, _ = run(capsys, "census", "--r", "4", "--n", "2", "--j", "2", "--q", "2", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 4
    rows = [line.split(",") for line in lines[1:]]
    assert sum(int(c) * int(f) for _, c, f, *_ in rows) == 35


def test_other_subcommands(capsys):
    assert run(capsys, "satake", "--g", "1", "--element", "Tp")[1].strip() == "Tp g=1: V1 + U1"
    assert "hat T1 = T2" in run(capsys, "dual", "--r", "3", "--n", "1", "--element", "T", "--i", "1")[1]
    code, out, _ = run(capsys, "degrees", "--r", "3", "--n", "1", "--format", "csv")
    assert code == 0 and out.startswith("element,d1s")
    assert run(capsys, "count", "--r", "4", "--j", "2", "--q", "2")[1].strip().endswith("35 (g = 35)")
    assert "(1,1,2,1,1)" in run(capsys, "hodge", "--r", "4", "--n", "2")[1]
    assert "2 tuples" in run(capsys, "invariants", "--r", "2", "--n", "2", "--nu-max", "2")[1]


def test_exit_codes(capsys):
    assert run(capsys, "census", "--r", "3", "--n", "5", "--j", "1", "--q", "2")[0] == 2
    assert run(capsys, "census", "--r", "3", "--n", "1", "--j", "1")[0] == 2
    assert run(capsys, "census", "--r", "6", "--n", "3", "--j", "3", "--q", "3", "--budget", "10")[0] == 3
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "hecke-poly", "--r", "2", "--n", "1", "--q", "1")[0] == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "poly", "--max-r", "3")
    assert code == 0 and out.strip().endswith("0 failed")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hecke_reduction", "hodge", "--g", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "siegel weight 3: (1,1,1,1)"
