from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from changhee_ode.combinatorics import stirling
from changhee_ode.errors import NonzeroConstant, NotAUnit, OrderExhausted
from changhee_ode.series import (
    TruncatedSeries,
    binom_power,
    exp_t,
    exp_xt,
    log1p_lambda_t,
    one,
    t_series,
    ts_derivative,
    ts_int_power,
    ts_mul,
    ts_reciprocal,
)
from changhee_ode.xlpoly import LAM, X, XLPoly

from conftest import fractions, xlpolys

F = Fraction


def S(*coeffs, order=None):
    return TruncatedSeries(list(coeffs), order)


def test_mul_examples():
    assert ts_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)
    a = S(X, LAM, 3)
    assert ts_mul(a, one(2)) == a


def test_log_square_by_hand():
    sq = ts_mul(log1p_lambda_t(4), log1p_lambda_t(4))
    # (lam t - lam^2 t^2/2 + ...)^2
    assert sq[2] == LAM**2
    assert sq[3] == -(LAM**3)


def test_mixed_orders_take_minimum():
    assert (S(1, 2, 3) + S(1, 1)).order == 1
    assert ts_mul(S(1, 2, 3), S(1, 1)).order == 1


def test_derivative_examples():
    d = ts_derivative(S(1, 1, 1))
    assert d == S(1, 2) and d.order == 1
    assert ts_derivative(S(5, 0, 0)).is_zero()
    with pytest.raises(OrderExhausted):
        ts_derivative(S(1))


def test_derivative_of_log():
    expected = S(*[(-1) ** m * LAM ** (m + 1) for m in range(5)])
    assert ts_derivative(log1p_lambda_t(5)) == expected


def test_reciprocal_examples():
    assert ts_reciprocal(S(1, 1, 0, 0)) == S(1, -1, 1, -1)
    r = ts_reciprocal(S(LAM * 2, LAM, 0, 0))
    half_inv = LAM**-1 * F(1, 2)
    assert r == S(half_inv, -half_inv * F(1, 2), half_inv * F(1, 4), -half_inv * F(1, 8))
    a = S(1, 1, 0, 0, 0)
    assert ts_mul(a, ts_reciprocal(a)) == one(4)


def test_reciprocal_requires_unit():
    with pytest.raises(NotAUnit):
        ts_reciprocal(S(X, 1))
    with pytest.raises(NotAUnit):
        ts_reciprocal(S(0, 1))


def test_log1p():
    assert log1p_lambda_t(3) == S(0, LAM, -(LAM**2) * F(1, 2), LAM**3 * F(1, 3))
    assert log1p_lambda_t(0) == S(0)


def test_log_powers_give_stirling_first_kind():
    L = log1p_lambda_t(10, XLPoly.const(1))
    for n in range(7):
        Ln = ts_int_power(L, n)
        for m in range(11):
            assert Ln[m] * F(factorial(m), factorial(n)) == stirling(1, m, n)


def test_binom_power_examples():
    assert binom_power(t_series(2), 2) == S(1, X, (X**2 - X) * F(1, 2))
    assert binom_power(S(0, 0, 0)) == one(2)
    u = log1p_lambda_t(2) * LAM**-1
    assert binom_power(u, 2) == S(1, X, -X * LAM * F(1, 2) + (X**2 - X) * F(1, 2))
    with pytest.raises(NonzeroConstant):
        binom_power(S(1, 1))


def test_int_power_examples():
    assert ts_int_power(S(1, 1, 0), -2) == S(1, -2, 3)
    assert ts_int_power(S(X, LAM, 2), 0) == one(2)
    a = one(6) * (LAM * 2) + log1p_lambda_t(6)
    assert ts_mul(ts_int_power(a, -1), a) == one(6)


def test_exp_examples():
    assert exp_t(2) == S(1, 1, F(1, 2))
    assert exp_xt(1) == S(1, X)
    assert ts_mul(exp_xt(3), exp_t(3))[2] == (X + 1) ** 2 * F(1, 2)


def test_json_round_trip():
    s = S(X, LAM**-1, F(2, 3))
    assert TruncatedSeries.from_json_obj(s.to_json_obj()) == s


lam_monomials = st.builds(
    lambda c, b: XLPoly.monomial(c, 0, b), fractions.filter(bool), st.integers(-2, 2)
)


@st.composite
def unit_series(draw, order=4):
    head = draw(lam_monomials)
    tail = draw(st.lists(xlpolys, min_size=order, max_size=order))
    return TruncatedSeries([head, *tail], order)


@settings(max_examples=40, deadline=None)
@given(unit_series())
def test_reciprocal_property(a):
    assert ts_mul(a, ts_reciprocal(a)) == one(a.order)


@settings(max_examples=40, deadline=None)
@given(st.lists(xlpolys, min_size=4, max_size=4), st.lists(xlpolys, min_size=4, max_size=4))
def test_product_rule(ac, bc):
    a, b = S(*ac), S(*bc)
    lhs = ts_derivative(ts_mul(a, b))
    rhs = ts_mul(ts_derivative(a), b.truncate(2)) + ts_mul(a.truncate(2), ts_derivative(b))
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(st.lists(xlpolys, min_size=3, max_size=3), st.integers(0, 4))
def test_binom_power_at_integer_exponent(tail, p):
    u = S(0, *tail)
    expected = ts_int_power(one(3) + u, p)
    assert binom_power(u).map(lambda c: c.substitute(x=p)) == expected.map(lambda c: c.substitute(x=p))
