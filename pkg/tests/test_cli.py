import csv
import io
import json

import pytest

from changhee_ode.cli import main
from changhee_ode.xlpoly import XLPoly, X


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_poly_text_and_json(capsys):
    code, out = run(capsys, "poly", "--family", "lambda-changhee", "--n", "2")
    assert code == 0
    assert out.strip() == "x^2 - x*lam - 2*x + 1/2*lam + 1/2"
    code, out = run(capsys, "poly", "--family", "euler", "--n", "2", "--format", "json")
    assert XLPoly.from_json(out) == X**2 - X


def test_poly_substitution(capsys):
    _, out = run(capsys, "poly", "--family", "lambda-changhee", "--n", "2", "--lambda", "0")
    assert out.strip() == "x^2 - 2*x + 1/2"
    _, out = run(capsys, "poly", "--family", "changhee", "--n", "3", "--x", "0")
    assert out.strip() == "-3/4"


def test_table_harmonic_csv(capsys):
    _, out = run(capsys, "table", "--harmonic", "3")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["N", "j", "value"]
    assert ["3", "1", "11/6"] in rows


def test_table_powersum_and_stirling(capsys):
    _, out = run(capsys, "table", "--powersum", "1,2,2")
    assert out.splitlines()[-1] == "1,2,2,10"
    _, out = run(capsys, "table", "--stirling", "first,3", "--format", "json")
    rows = json.loads(out)
    assert {"n": "3", "k": "2", "value": "-3"} in rows


@pytest.mark.parametrize("source", ["recurrence", "closed"])
def test_table_coeffs_json(capsys, source):
    _, out = run(capsys, "table", "--coeffs", "2", "--source", source)
    obj = json.loads(out)
    assert obj["N"] == 2
    keys = [(e["i"], e["j"]) for e in obj["entries"]]
    assert keys == sorted(keys, key=lambda ij: (ij[0] + ij[1], ij[0]))
    by_key = {(e["i"], e["j"]): XLPoly.from_json_obj(e["poly"]) for e in obj["entries"]}
    assert by_key[(1, 1)] == -2 * X


def test_verify_suite_exit_code_and_out(tmp_path, capsys):
    out_path = tmp_path / "r.json"
    code = main(["verify", "--suite", "thm4", "--nmax", "2", "--kmax", "2", "--format", "json", "--out", str(out_path)])
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["all_pass"] is True
    assert doc["reports"][0]["summary"]["total"] == 6


def test_verify_text_numeric_lambda(capsys):
    code, out = run(capsys, "verify", "--suite", "thm3", "--nmax", "2", "--order", "6", "--lambda", "1/2")
    assert code == 0
    assert "PASS ode-residual: 4/4" in out


def test_verify_reports_failure_exit_code(monkeypatch, capsys):
    from changhee_ode import cli, harness

    def broken(nmax):
        r = harness.VerificationReport("broken")
        r.add({"n": 0}, 1, 0)
        return r

    monkeypatch.setattr(cli.harness, "background_checks", broken)
    code, out = run(capsys, "verify", "--suite", "background")
    assert code == 1
    assert "FAIL [n=0]" in out


def test_bad_lambda_is_reported(capsys):
    code = main(["verify", "--suite", "thm4", "--nmax", "1", "--kmax", "0", "--lambda", "0"])
    assert code == 2
    assert "error" in capsys.readouterr().err
