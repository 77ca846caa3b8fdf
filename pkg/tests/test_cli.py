import json
import subprocess
import sys

import pytest

from parametric_eco.algebra import Polynomial
from parametric_eco.cli import run


def test_seq_catalan():
    code, out = run(["seq", "--builtin", "dyck-main", "--terms", "4", "--set", "x*=1", "--set", "y*=1"])
    assert code == 0
    assert out == "1, 2, 5, 14\n"


def test_seq_little_schroeder():
    code, out = run(["seq", "--builtin", "dyck-main", "--terms", "3", "--set", "x0=2", "--set", "x*=1", "--set", "y*=1"])
    assert (code, out) == (0, "1, 3, 11\n")


def test_seq_rule_file(tmp_path):
    rule = tmp_path / "fib.rule"
    rule.write_text("axiom (1; 1)\nrule (1) -> (2; 1)\nrule (2) -> (1; 1) (2; 1)\n", encoding="utf-8")
    code, out = run(["seq", "--rule", str(rule), "--terms", "6"])
    assert (code, out) == (0, "1, 1, 2, 3, 5, 8\n")
    code, out = run(["seq", "--rule", str(rule), "--terms", "3", "--format", "csv"])
    assert out.splitlines() == ["n,value", "0,1", "1,1", "2,2"]


def test_seq_json_schema():
    code, out = run(["seq", "--builtin", "fibonacci-poly", "--terms", "4", "--format", "json"])
    doc = json.loads(out)
    assert set(doc) == {"command", "params", "result"}
    assert doc["command"] == "seq"
    values = [Polynomial.from_json(p) for p in doc["result"]]
    assert [str(v) for v in values] == ["1", "1", "1 + x", "1 + 2*x"]


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.rule"
    bad.write_text("axiom (1; 1)\nrule (1) -> (2 1)\n", encoding="utf-8")
    code, _ = run(["seq", "--rule", str(bad)])
    assert code == 2
    assert "line 2, column 16" in capsys.readouterr().err


def test_unknown_names_exit_3():
    assert run(["seq", "--builtin", "nope"])[0] == 3
    assert run(["gf", "--form", "bogus"])[0] == 3
    assert run(["gf", "--form", "matrix:nope"])[0] == 3
    assert run(["verify", "--suite", "nope"])[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["gf", "--form", "f0", "--order", "-1"],
        ["gf", "--form", "fk:two"],
        ["paths", "--n", "20"],
        ["seq", "--builtin", "dyck-main", "--set", "x0"],
        ["seq", "--builtin", "dyck-main", "--set", "z=1"],
        ["seq", "--builtin", "dyck-main", "--terms", "0"],
        ["seq"],
        ["frobnicate"],
    ],
)
def test_invalid_arguments_exit_4(argv):
    assert run(argv)[0] == 4


def test_gf_forms():
    assert run(["gf", "--form", "catalan", "--order", "4"]) == (0, "1, 1, 2, 5, 14\n")
    assert run(["gf", "--form", "f0", "--order", "2"]) == (0, "1, x0 + x1, x0 + x0^2 + 2*x0*x1 + x1^2\n")
    assert run(["gf", "--form", "g1", "--order", "0"]) == (0, "1\n")
    assert run(["gf", "--form", "matrix:dyck-main", "--order", "3", "--set", "x*=1", "--set", "y*=1"]) == (
        0,
        "1, 2, 5, 14\n",
    )
    code, out = run(["gf", "--form", "gn:2", "--order", "2"])
    assert code == 0 and out.count(",") == 2


def test_paths_summary():
    code, out = run(["paths", "--n", "1", "--summary"])
    assert "omega sum: x0\n" in out
    code, out = run(["paths", "--n", "2", "--summary"])
    assert "omega sum: x0^2 + x0*x1*y1\n" in out
    assert "high_peak sum: 1 + y1\n" in out


def test_paths_listing():
    code, out = run(["paths", "--n", "3"])
    assert out.split() == ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]
    code, out = run(["paths", "--n", "2", "--stats", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0] == "word,rise_heights,peak_heights,s_counts,contacts,excursions,final_descent,double_rises"
    assert lines[1] == "uudd,1,1,0:1 1:1,2,1,2,1"
    code, out = run(["paths", "--n", "2", "--stats", "--format", "json"])
    rows = json.loads(out)["result"]
    assert rows[1]["word"] == "udud" and rows[1]["contacts"] == 3


def test_matrix_show():
    code, out = run(["matrix", "show", "--builtin", "fibonacci-poly", "--format", "json"])
    assert json.loads(out) == [["0", "1"], ["x", "1"]]
    code, out = run(["matrix", "show", "--builtin", "dyck-high-peak", "--size", "3", "--format", "json"])
    assert json.loads(out) == [["y1", "1", "0"], ["y1", "y2", "1"], ["y1", "y2", "y3"]]


def test_verify_catalog_and_exit_codes():
    code, out = run(["verify", "--suite", "catalog"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 15 and all(line.startswith("PASS") for line in lines)
    code, out = run(["verify", "--suite", "oracle", "--n-max", "5"])
    assert code == 1  # left-to-right rise numbering breaks at n = 5
    assert "PASS: weighted path sums, rises indexed by preceding blocks" in out


def test_verify_border_json():
    code, out = run(["verify", "--suite", "border", "--order", "6", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["params"]["seed"] == 0
    assert all(c["passed"] for c in doc["result"])


def test_output_is_deterministic():
    argv = ["verify", "--suite", "border", "--order", "5", "--seed", "3"]
    assert run(argv) == run(argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parametric_eco", "seq", "--builtin", "fibonacci", "--terms", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1, 1, 2, 3, 5, 8\n"
