"""Truncated formal power series in ``t`` with :class:`XLPoly` coefficients.

A :class:`TruncatedSeries` of order ``T`` stands for ``sum_{n<=T} c_n t^n + O(t^{T+1})``.
Binary operations truncate to the smaller order of their operands.

The ``lam`` argument accepted by the constructors below is the value used for
lambda: the symbol :data:`LAM` by default, or any constant ``XLPoly`` to work
with a numeric lambda from the start.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .combinatorics import falling_factorial
from .errors import NonzeroConstant, OrderExhausted
from .xlpoly import LAM, ONE, X, ZERO, Rational, XLPoly

__all__ = [
    "TruncatedSeries",
    "ts_mul",
    "ts_derivative",
    "ts_reciprocal",
    "ts_int_power",
    "log1p_lambda_t",
    "binom_power",
    "exp_xt",
    "exp_t",
    "one",
    "t_series",
]


class TruncatedSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[XLPoly | Rational], order: int | None = None):
        cs = [XLPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = cs[: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs: tuple[XLPoly, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: XLPoly | Rational, order: int) -> TruncatedSeries:
        return cls([c], order)

    def __getitem__(self, n: int) -> XLPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def map(self, fn) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        T = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[n] + other.coeffs[n] for n in range(T + 1)], T)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, other)
        if isinstance(other, (XLPoly, int, Fraction)):
            other = XLPoly.coerce(other)
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        return NotImplemented

    def __rmul__(self, other) -> TruncatedSeries:
        if isinstance(other, (XLPoly, int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    def to_json_obj(self) -> list:
        return [c.to_json_obj() for c in self.coeffs]

    @classmethod
    def from_json_obj(cls, obj: Sequence) -> TruncatedSeries:
        return cls([XLPoly.from_json_obj(c) for c in obj])


def one(T: int) -> TruncatedSeries:
    return TruncatedSeries.constant(ONE, T)


def t_series(T: int) -> TruncatedSeries:
    """The series ``t`` itself."""
    return TruncatedSeries([ZERO, ONE], T)


def ts_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    T = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    # skip zero coefficients up front; valuations are often positive
    nz_a = [(p, c) for p, c in enumerate(ac[: T + 1]) if c]
    nz_b = [(q, c) for q, c in enumerate(bc[: T + 1]) if c]
    acc: list[dict] = [dict() for _ in range(T + 1)]
    for p, ca in nz_a:
        for q, cb in nz_b:
            n = p + q
            if n > T:
                break
            d = acc[n]
            for key, val in (ca * cb)._terms.items():
                d[key] = d.get(key, 0) + val
    out = [XLPoly._raw({k: v for k, v in d.items() if v}) for d in acc]
    return TruncatedSeries(out, T)


def ts_derivative(a: TruncatedSeries) -> TruncatedSeries:
    if a.order == 0:
        raise OrderExhausted("cannot differentiate a series of order 0")
    return TruncatedSeries([a.coeffs[n + 1] * (n + 1) for n in range(a.order)], a.order - 1)


def ts_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """``1 / a`` for a series whose constant term is a lambda-monomial."""
    inv0 = a.coeffs[0].invert_monomial()
    neg_inv0 = -inv0
    b = [inv0]
    for n in range(1, a.order + 1):
        s = ZERO
        for p in range(1, n + 1):
            if a.coeffs[p]:
                s = s + a.coeffs[p] * b[n - p]
        b.append(neg_inv0 * s)
    return TruncatedSeries(b, a.order)


def ts_int_power(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e == 0:
        return one(a.order)
    if e < 0:
        a, e = ts_reciprocal(a), -e
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else ts_mul(result, base)
        e >>= 1
        if e:
            base = ts_mul(base, base)
    return result


def log1p_lambda_t(T: int, lam: XLPoly = LAM) -> TruncatedSeries:
    """``log(1 + lam t) = sum_{m>=1} (-1)^{m+1} lam^m t^m / m`` truncated at order T."""
    coeffs = [ZERO]
    power = ONE
    for m in range(1, T + 1):
        power = power * lam
        coeffs.append(power * Fraction((-1) ** (m + 1), m))
    return TruncatedSeries(coeffs[: T + 1], T)


def binom_power(u: TruncatedSeries, T: int | None = None) -> TruncatedSeries:
    """``(1 + u)^x = sum_m (x)_m / m! u^m`` for ``u`` without constant term."""
    if u.coeffs[0]:
        raise NonzeroConstant(f"binom_power needs u(0) = 0, got {u.coeffs[0]}")
    if T is None:
        T = u.order
    T = min(T, u.order)
    u = u.truncate(T)
    result = one(T)
    upow = one(T)
    for m in range(1, T + 1):
        upow = ts_mul(upow, u)
        result = result + upow * (falling_factorial(m) * Fraction(1, factorial(m)))
    return result


def exp_xt(T: int) -> TruncatedSeries:
    return TruncatedSeries([X**m * Fraction(1, factorial(m)) for m in range(T + 1)], T)


def exp_t(T: int) -> TruncatedSeries:
    return TruncatedSeries([Fraction(1, factorial(m)) for m in range(T + 1)], T)
