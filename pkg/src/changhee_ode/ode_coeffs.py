"""Coefficients ``a_{i,j}(N, x)`` of the linear ODE satisfied by the lambda-Changhee
generating function ``F``::

    F^(N) = lam^N (1 + lam t)^-N * sum_{1<=i+j<=N} a_{i,j}(N, x) (2 lam + L)^-i (lam + L)^-j * F

with ``L = log(1 + lam t)``.  The table is built two independent ways (an
index recurrence in N and a closed form) and the ODE itself is checked
against repeated differentiation of ``F``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Mapping

from .combinatorics import falling_factorial, harmonic, power_sum
from .errors import OrderExhausted
from .series import (
    TruncatedSeries,
    log1p_lambda_t,
    one,
    t_series,
    ts_derivative,
    ts_int_power,
    ts_mul,
    ts_reciprocal,
)
from .special_polys import lambda_changhee_series
from .xlpoly import LAM, ONE, X, ZERO, XLPoly

RECURRENCE = "recurrence"
CLOSED_FORM = "closed-form"
_SOURCE_ALIASES = {"recurrence": RECURRENCE, "closed-form": CLOSED_FORM, "closed": CLOSED_FORM}

Index = tuple[int, int]

#: Coefficients at N = 1, read off the first derivative of F.
BASE_VALUES: dict[Index, XLPoly] = {(1, 0): -ONE, (0, 1): X}


def normalize_source(source: str) -> str:
    try:
        return _SOURCE_ALIASES[source]
    except KeyError:
        raise ValueError(f"unknown source {source!r}; expected recurrence or closed-form") from None


@dataclass(frozen=True)
class CoeffTable:
    """``a_{i,j}(N, x)`` for ``1 <= i + j <= N``; absent indices read as zero."""

    N: int
    values: Mapping[Index, XLPoly] = field(repr=False)
    source: str = RECURRENCE

    def __post_init__(self):
        for (i, j) in self.values:
            if i < 0 or j < 0 or not 1 <= i + j <= self.N:
                raise ValueError(f"index {(i, j)} outside 1 <= i+j <= {self.N}")

    def __getitem__(self, ij: Index) -> XLPoly:
        return self.values.get(ij, ZERO)

    def indices(self) -> Iterator[Index]:
        """All ``(i, j)`` with ``1 <= i+j <= N`` ordered by ``(i+j, i)``."""
        for r in range(1, self.N + 1):
            for i in range(r + 1):
                yield i, r - i

    def same_values(self, other: CoeffTable) -> bool:
        return self.N == other.N and all(self[ij] == other[ij] for ij in self.indices())

    def is_lambda_free(self) -> bool:
        return not any(p.has_lambda() for p in self.values.values())

    def replace(self, ij: Index, value: XLPoly) -> CoeffTable:
        values = dict(self.values)
        values[ij] = value
        return CoeffTable(self.N, values, self.source)

    def to_json_obj(self) -> dict:
        return {
            "N": self.N,
            "entries": [
                {"i": i, "j": j, "poly": self[i, j].to_json_obj()} for i, j in self.indices()
            ],
        }


def coeffs_by_recurrence(N: int, base: Mapping[Index, XLPoly] | None = None) -> CoeffTable:
    """Iterate ``a_{i,j}(M+1) = -M a_{i,j}(M) - i a_{i-1,j}(M) + (x-j+1) a_{i,j-1}(M)``
    from the ``N = 1`` table, with every out-of-range index read as zero.

    ``base`` overrides the ``N = 1`` values (used by negative controls).
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    cur = dict(BASE_VALUES if base is None else base)
    for M in range(1, N):
        nxt: dict[Index, XLPoly] = {}
        for r in range(1, M + 2):
            for i in range(r + 1):
                j = r - i
                v = cur.get((i, j), ZERO) * (-M)
                if i >= 1:
                    v = v - cur.get((i - 1, j), ZERO) * i
                if j >= 1:
                    v = v + cur.get((i, j - 1), ZERO) * (X - (j - 1))
                if v:
                    nxt[(i, j)] = v
        cur = nxt
    return CoeffTable(N, cur, RECURRENCE)


def closed_form_entry(N: int, i: int, j: int) -> XLPoly:
    """``(-1)^{N-j} i! S_{1,i-1}(j) (N-1)! H_{N-1,i+j-1} (x)_j`` with ``S_{1,-1} = 1``."""
    r = i + j
    sign = -1 if (N - j) % 2 else 1
    scalar = sign * factorial(i) * power_sum(1, i - 1, j) * factorial(N - 1) * harmonic(N - 1, r - 1)
    return falling_factorial(j) * scalar


def coeffs_by_closed_form(N: int) -> CoeffTable:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    values = {}
    for r in range(1, N + 1):
        for i in range(r + 1):
            v = closed_form_entry(N, i, r - i)
            if v:
                values[(i, r - i)] = v
    return CoeffTable(N, values, CLOSED_FORM)


def build_table(N: int, source: str) -> CoeffTable:
    source = normalize_source(source)
    if source == RECURRENCE:
        return coeffs_by_recurrence(N)
    return coeffs_by_closed_form(N)


def f_series(T: int, lam: XLPoly = LAM) -> TruncatedSeries:
    return lambda_changhee_series(T, lam)


def f_derivative_oracle(N: int, T: int, lam: XLPoly = LAM) -> TruncatedSeries:
    """``(d/dt)^N F`` by repeated term-wise differentiation; the result has order ``T - N``."""
    if T < N:
        raise OrderExhausted(f"order {T} is too small for {N} derivatives")
    s = f_series(T, lam)
    for _ in range(N):
        s = ts_derivative(s)
    return s


def ode_rhs(table: CoeffTable, T: int, lam: XLPoly = LAM, F: TruncatedSeries | None = None) -> TruncatedSeries:
    """Right-hand side of the ODE for ``table``, truncated at order ``T - N``."""
    N = table.N
    if T < N:
        raise OrderExhausted(f"order {T} is too small for N = {N}")
    L = log1p_lambda_t(T, lam)
    inv_2lam_L = ts_reciprocal(one(T) * (lam * 2) + L)
    inv_lam_L = ts_reciprocal(one(T) * lam + L)
    pow_a = [one(T)]
    pow_b = [one(T)]
    for _ in range(N):
        pow_a.append(ts_mul(pow_a[-1], inv_2lam_L))
        pow_b.append(ts_mul(pow_b[-1], inv_lam_L))

    # group by j so each power of the second factor is multiplied once
    total = TruncatedSeries([ZERO], T)
    for j in range(N + 1):
        inner = TruncatedSeries([ZERO], T)
        for i in range(N + 1 - j):
            a = table[i, j]
            if a:
                inner = inner + pow_a[i] * a
        if not inner.is_zero():
            total = total + ts_mul(inner, pow_b[j])

    one_plus_lam_t = one(T) + t_series(T) * lam
    prefactor = ts_int_power(one_plus_lam_t, -N) * (lam**N)
    if F is None:
        F = f_series(T, lam)
    return ts_mul(ts_mul(prefactor, total), F).truncate(T - N)


def ode_residual(
    N: int,
    T: int,
    source: str = CLOSED_FORM,
    lam: XLPoly = LAM,
    table: CoeffTable | None = None,
) -> TruncatedSeries:
    """``F^(N) - rhs``; the ODE holds through ``t^{T-N}`` iff this is the zero series."""
    if table is None:
        table = build_table(N, source)
    F = f_series(T, lam)
    lhs = F
    for _ in range(N):
        lhs = ts_derivative(lhs)
    return lhs - ode_rhs(table, T, lam, F=F)


__all__ = [
    "CoeffTable",
    "BASE_VALUES",
    "RECURRENCE",
    "CLOSED_FORM",
    "coeffs_by_recurrence",
    "coeffs_by_closed_form",
    "closed_form_entry",
    "build_table",
    "f_series",
    "f_derivative_oracle",
    "ode_rhs",
    "ode_residual",
]
