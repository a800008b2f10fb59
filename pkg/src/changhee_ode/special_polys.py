"""Euler, Changhee and lambda-Changhee polynomials read off their generating functions.

Entry ``n`` of every family is ``n! [t^n]`` of the corresponding generating
function, computed in the truncated series ring.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .combinatorics import StirlingFn, stirling
from .errors import PoleNotCancelled
from .series import (
    TruncatedSeries,
    binom_power,
    exp_t,
    exp_xt,
    log1p_lambda_t,
    one,
    t_series,
    ts_mul,
    ts_reciprocal,
)
from .xlpoly import LAM, XLPoly, xlp_sum

EULER = "euler"
CHANGHEE = "changhee"
LAMBDA_CHANGHEE = "lambda-changhee"
FAMILIES = (EULER, CHANGHEE, LAMBDA_CHANGHEE)


@dataclass(frozen=True)
class PolySequence:
    family: str
    entries: tuple[XLPoly, ...]

    def __getitem__(self, n: int) -> XLPoly:
        return self.entries[n]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[XLPoly]:
        return iter(self.entries)


def _egf_entries(series: TruncatedSeries, nmax: int) -> tuple[XLPoly, ...]:
    return tuple(series[n] * factorial(n) for n in range(nmax + 1))


@lru_cache(maxsize=64)
def euler_polys(nmax: int) -> PolySequence:
    """``E_n(x)`` from ``2 e^{xt} / (e^t + 1)``."""
    denom = exp_t(nmax) + one(nmax)
    gf = ts_mul(ts_reciprocal(denom), exp_xt(nmax)) * 2
    return PolySequence(EULER, _egf_entries(gf, nmax))


@lru_cache(maxsize=64)
def changhee_polys(nmax: int) -> PolySequence:
    """``Ch_n(x)`` from ``2 (1+t)^x / (2 + t)``."""
    t = t_series(nmax)
    denom = one(nmax) * 2 + t
    gf = ts_mul(ts_reciprocal(denom), binom_power(t, nmax)) * 2
    return PolySequence(CHANGHEE, _egf_entries(gf, nmax))


def lambda_changhee_series(T: int, lam: XLPoly = LAM) -> TruncatedSeries:
    """``2 lam / (2 lam + L) * (1 + L / lam)^x`` with ``L = log(1 + lam t)``."""
    L = log1p_lambda_t(T, lam)
    two_lam = lam * 2
    prefactor = ts_reciprocal(one(T) * two_lam + L) * two_lam
    return ts_mul(prefactor, binom_power(L * lam.invert_monomial(), T))


@lru_cache(maxsize=64)
def lambda_changhee_polys(nmax: int, T: int | None = None, lam: XLPoly = LAM) -> PolySequence:
    """``Ch_{n,lam}(x)`` for ``0 <= n <= nmax``.

    The generating function is expanded in the Laurent ring; every ``1/lam``
    must cancel in the final coefficients and :class:`PoleNotCancelled` is
    raised if one survives.
    """
    if T is None:
        T = nmax
    if T < nmax:
        raise ValueError(f"truncation order {T} cannot determine entries up to {nmax}")
    entries = _egf_entries(lambda_changhee_series(T, lam), nmax)
    for n, p in enumerate(entries):
        if p and p.lambda_degrees()[0] < 0:
            raise PoleNotCancelled(f"entry {n} keeps a negative lambda power: {p}")
    return PolySequence(LAMBDA_CHANGHEE, entries)


def lambda_changhee_numbers(nmax: int, lam: XLPoly = LAM) -> tuple[XLPoly, ...]:
    return tuple(p.substitute(x=0) for p in lambda_changhee_polys(nmax, lam=lam))


def convert_euler_from_changhee(
    changhee: PolySequence | int, stirling_fn: StirlingFn = stirling
) -> PolySequence:
    """``E_n = sum_m S2(n, m) Ch_m``; accepts the Changhee entries or just ``nmax``."""
    if isinstance(changhee, int):
        changhee = changhee_polys(changhee)
    nmax = len(changhee) - 1
    entries = tuple(
        xlp_sum(changhee[m] * stirling_fn("second", n, m) for m in range(n + 1))
        for n in range(nmax + 1)
    )
    return PolySequence(EULER, entries)


def convert_changhee_from_euler(
    euler: PolySequence | int, stirling_fn: StirlingFn = stirling
) -> PolySequence:
    """``Ch_n = sum_m S1(n, m) E_m``; accepts the Euler entries or just ``nmax``."""
    if isinstance(euler, int):
        euler = euler_polys(euler)
    nmax = len(euler) - 1
    entries = tuple(
        xlp_sum(euler[m] * stirling_fn("first", n, m) for m in range(n + 1))
        for n in range(nmax + 1)
    )
    return PolySequence(CHANGHEE, entries)


def family_polys(family: str, nmax: int, lam: XLPoly = LAM) -> PolySequence:
    if family == EULER:
        return euler_polys(nmax)
    if family == CHANGHEE:
        return changhee_polys(nmax)
    if family == LAMBDA_CHANGHEE:
        return lambda_changhee_polys(nmax, lam=lam)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


__all__ = [
    "PolySequence",
    "euler_polys",
    "changhee_polys",
    "lambda_changhee_series",
    "lambda_changhee_polys",
    "lambda_changhee_numbers",
    "convert_euler_from_changhee",
    "convert_changhee_from_euler",
    "family_polys",
    "FAMILIES",
]
