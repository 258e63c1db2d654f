import json
import subprocess
import sys

import pytest

from isodom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--family", "path", "--n", "5", "--isolate", "--format", "csv")
    assert code == 0
    assert out.split() == ["2,3", "3,7", "4,2"]


def test_count_formula_complete(capsys):
    code, out, _ = run(capsys, "count", "--family", "complete", "--n", "4", "--isolate", "--method", "formula")
    assert (code, out.strip()) == (0, "1,4")


def test_count_edges(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("0 1\n1 2\n")
    code, out, _ = run(capsys, "count", "--edges", str(f), "--isolate")
    assert code == 0 and out.split() == ["1,1", "2,1"]


def test_count_json_dense(capsys):
    code, out, _ = run(capsys, "count", "--family", "path", "--n", "4", "--format", "json")
    payload = json.loads(out)
    assert payload["result"]["value"] == ["0", "0", "4", "4", "1"]
    assert "timing" not in payload


@pytest.mark.parametrize(
    "argv",
    [
        ["--family", "path", "--n", "9", "--isolate"],
        ["--family", "path", "--n", "9"],
        ["--family", "star", "--n", "4", "--isolate"],
        ["--family", "corona-k1", "--n", "4", "--isolate"],
        ["--family", "join", "--lhs", "complete:1", "--rhs", "path:5", "--isolate"],
        ["--family", "join", "--lhs", "path:3", "--rhs", "cycle:4", "--isolate"],
    ],
)
def test_formula_and_oracle_agree_where_formulas_hold(capsys, argv):
    _, by_formula, _ = run(capsys, "count", *argv, "--method", "formula")
    _, by_oracle, _ = run(capsys, "count", *argv)
    assert by_formula == by_oracle


def test_formula_unavailable(capsys):
    code, _, err = run(capsys, "count", "--family", "cycle", "--n", "5", "--method", "formula")
    assert code == 2 and "no dominating formula" in err


def test_cap_exceeded(monkeypatch, capsys):
    monkeypatch.setenv("ISODOM_CAP", "4")
    code, _, err = run(capsys, "count", "--family", "path", "--n", "5")
    assert code == 2 and "capped at 4" in err


def test_parse_error_exit(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("0 a\n")
    code, _, err = run(capsys, "count", "--edges", str(f))
    assert code == 2 and "line 1" in err


@pytest.mark.parametrize(
    "argv, text",
    [
        (["--family", "corona-k1", "--n", "2", "--variant", "reconciled"], "3x^2 + 2x^3"),
        (["--family", "path", "--n", "5", "--isolate"], "3x^2 + 7x^3 + 2x^4"),
        (["--family", "complete", "--n", "3", "--isolate"], "3x"),
    ],
)
def test_poly(capsys, argv, text):
    code, out, _ = run(capsys, "poly", *argv)
    assert (code, out.strip()) == (0, text)


def test_poly_variant_requires_corona(capsys):
    code, _, _ = run(capsys, "poly", "--family", "path", "--n", "3", "--variant", "literal")
    assert code == 2


def test_verify_explicit_clean(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--target", "d-path-explicit", "--n-max", "12", "--out", str(out))
    assert code == 0
    report = json.loads(out.read_text())["result"]["value"]
    assert report["summary"]["mismatches"] == 0


def test_verify_cycle_mismatch(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--target", "d0-cycle", "--n-max", "8", "--out", str(out))
    assert code == 1
    grid = json.loads(out.read_text())["result"]["value"]["grid"]
    cell = next(c for c in grid if c["params"]["n"] == 5 and c["params"]["i"] == 2)
    assert (cell["formula_value"], cell["oracle_value"], cell["match"]) == ("4", "5", False)


def test_verify_table1_reports_two_misprints(capsys):
    code, out, _ = run(capsys, "verify", "--target", "table1")
    report = json.loads(out)["result"]["value"]
    assert report["summary"]["matches"] == 76
    assert code == 1


def test_verify_unknown_target(capsys):
    code, _, _ = run(capsys, "verify", "--target", "bogus")
    assert code == 2


def test_verify_all(tmp_path, capsys):
    out = tmp_path / "all.json"
    code, _, _ = run(capsys, "verify", "--all", "--n-max", "6", "--out", str(out))
    assert code == 1
    assert len(json.loads(out.read_text())["result"]["value"]) == 13


def test_byte_identical_output():
    cmd = [sys.executable, "-m", "isodom", "verify", "--target", "d0-join", "--seed", "3"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout


def test_exit_codes_via_subprocess(tmp_path):
    ok = subprocess.run([sys.executable, "-m", "isodom", "verify", "--target", "d0-path", "--n-max", "12"],
                        capture_output=True)
    bad = subprocess.run([sys.executable, "-m", "isodom", "verify", "--target", "d0-cycle", "--n-max", "6"],
                         capture_output=True)
    err = subprocess.run([sys.executable, "-m", "isodom", "count", "--family", "cycle", "--n", "2"],
                         capture_output=True)
    assert (ok.returncode, bad.returncode, err.returncode) == (0, 1, 2)
