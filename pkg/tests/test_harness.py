import json
from fractions import Fraction

import pytest

from changhee_ode.combinatorics import stirling
from changhee_ode.harness import (
    VerificationReport,
    background_checks,
    check_changhee_from_euler,
    check_powersum_step,
    check_stirling_orthogonality,
    perturbed_base,
    perturbed_stirling,
    thm2_check,
    thm3_check,
    thm4_check,
    thm4_rhs,
)
from changhee_ode.ode_coeffs import coeffs_by_closed_form
from changhee_ode.special_polys import lambda_changhee_polys
from changhee_ode.xlpoly import LAM, X, XLPoly

F = Fraction


@pytest.fixture(scope="module")
def polys():
    return lambda_changhee_polys(10)


def test_thm4_rhs_first_point(polys):
    # only the all-zero index survives: a_{0,1}(1) + a_{1,0}(1) / 2
    assert thm4_rhs(1, 0, polys, coeffs_by_closed_form(1)) == X - F(1, 2)


def test_thm4_rhs_small_points(polys):
    expected = X**2 - (LAM + 2) * X + (LAM + 1) * F(1, 2)
    assert thm4_rhs(1, 1, polys, coeffs_by_closed_form(1)) == expected
    assert thm4_rhs(2, 0, polys, coeffs_by_closed_form(2)) == expected


def test_thm4_rhs_rejects_mismatched_table(polys):
    with pytest.raises(ValueError):
        thm4_rhs(2, 0, polys, coeffs_by_closed_form(3))


def test_thm4_check_grid():
    report = thm4_check(4, 4)
    assert len(report.results) == 20
    assert {(p["N"], p["k"]) for p in report.grid} == {(N, k) for N in range(1, 5) for k in range(5)}
    first = [r for r in report.results if r.point == {"N": 1, "k": 0}][0]
    assert first.passed
    for r in report.failures():
        assert not r.diff.is_zero()
        assert r.lhs - r.rhs == r.diff


def test_thm4_check_numeric_lambda():
    assert thm4_check(3, 3, lam=XLPoly.const(F(2, 3))).all_pass


def test_thm4_check_with_corrupted_stirling():
    report = thm4_check(2, 3, stirling_fn=perturbed_stirling("first", 2, 1))
    assert report.n_fail >= 1


def test_background_examples():
    r = check_changhee_from_euler(2)
    assert r.all_pass
    lem = check_powersum_step(3)
    assert [res.point for res in lem.results] == [
        {"N": 2, "r": 2, "i": 1},
        {"N": 3, "r": 2, "i": 1},
        {"N": 3, "r": 3, "i": 1},
        {"N": 3, "r": 3, "i": 2},
    ]
    point = [res for res in lem.results if res.point == {"N": 3, "r": 3, "i": 1}][0]
    assert point.lhs == 2 + 1 and point.rhs == 3
    assert all(res.passed for res in lem.results)
    orth = check_stirling_orthogonality(3)
    point = [res for res in orth.results if res.point == {"n": 3, "k": 1}][0]
    assert point.lhs == 0 and point.passed


def test_background_all_pass():
    report = background_checks()
    assert report.all_pass
    ids = {r.point["identity"] for r in report.results}
    assert ids == {
        "euler-from-changhee",
        "changhee-from-euler",
        "stirling1-log-gf",
        "stirling-orthogonality",
        "powersum-step",
        "harmonic-diagonal",
        "lambda-zero-degeneration",
    }


def test_background_rejects_unknown_limit():
    with pytest.raises(TypeError):
        background_checks(bogus=3)


def test_failure_record_carries_full_values():
    report = VerificationReport("demo")
    report.add({"n": 1}, X + 1, X)
    report.add({"n": 0}, X, X)
    obj = report.to_json_obj()
    assert obj["summary"] == {"total": 2, "pass": 1, "fail": 1}
    assert [r["status"] for r in obj["results"]] == ["PASS", "FAIL"]
    fail = obj["results"][1]
    assert XLPoly.from_json_obj(fail["diff"]) == XLPoly.const(1)
    assert XLPoly.from_json_obj(fail["lhs"]) == X + 1
    assert "FAIL [n=1]" in report.to_text()


def test_report_order_is_independent_of_insertion():
    a, b = VerificationReport("x"), VerificationReport("x")
    pts = [{"N": n, "k": k} for n in (10, 2, 1) for k in (3, 0)]
    for p in pts:
        a.add(p, 0, 0)
    for p in reversed(pts):
        b.add(p, 0, 0)
    assert json.dumps(a.to_json_obj()) == json.dumps(b.to_json_obj())
    assert [p["N"] for p in a.grid][:2] == [1, 1]


def test_thm2_and_thm3_pass_small():
    assert thm2_check(6).all_pass
    assert thm3_check(3, 8).all_pass


@pytest.mark.parametrize("ij", [(1, 0), (0, 1)])
def test_perturbed_base_values_fail(ij):
    assert not thm2_check(3, base=perturbed_base(ij)).all_pass
    assert not thm3_check(2, 6, lams=[LAM], sources=["recurrence"], base=perturbed_base(ij)).all_pass


def test_perturbed_stirling_only_changes_one_entry():
    fn = perturbed_stirling("second", 4, 2, delta=5)
    assert fn("second", 4, 2) == 12
    assert fn("second", 4, 3) == stirling(2, 4, 3)
    assert fn("first", 4, 2) == stirling(1, 4, 2)
