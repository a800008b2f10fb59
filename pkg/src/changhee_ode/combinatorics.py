"""Exact integer and rational sequences: Stirling numbers, generalized harmonic
numbers, generalized Changhee power sums, falling factorials and multinomials.

Everything is memoized.  Integer-valued sequences return plain ``int``; the
harmonic numbers return :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import OutOfDomain, PartsMismatch
from .xlpoly import ONE, X, XLPoly

FIRST = "first"
SECOND = "second"

#: Signature of a Stirling-number provider: ``(kind, n, k) -> int``.
StirlingFn = Callable[[str, int, int], int]


def _kind(kind: str | int) -> str:
    if kind in (FIRST, 1, "1", "first-signed"):
        return FIRST
    if kind in (SECOND, 2, "2"):
        return SECOND
    raise ValueError(f"unknown Stirling kind {kind!r}")


@lru_cache(maxsize=None)
def _s1(n: int, k: int) -> int:
    if n == 0 or k == 0:
        return 1 if n == k else 0
    if k > n:
        return 0
    return _s1(n - 1, k - 1) - (n - 1) * _s1(n - 1, k)


@lru_cache(maxsize=None)
def _s2(n: int, k: int) -> int:
    if n == 0 or k == 0:
        return 1 if n == k else 0
    if k > n:
        return 0
    return _s2(n - 1, k - 1) + k * _s2(n - 1, k)


def stirling(kind: str | int, n: int, k: int) -> int:
    """Signed Stirling number of the first kind or Stirling number of the second kind.

    Indices outside ``0 <= k <= n`` give 0.

    >>> stirling("first", 3, 2), stirling("second", 4, 2)
    (-3, 7)
    """
    if n < 0 or k < 0:
        return 0
    if _kind(kind) == FIRST:
        return _s1(n, k)
    return _s2(n, k)


def stirling1(n: int, k: int) -> int:
    return stirling(FIRST, n, k)


def stirling2(n: int, k: int) -> int:
    return stirling(SECOND, n, k)


@lru_cache(maxsize=None)
def harmonic(N: int, j: int) -> Fraction:
    """Generalized harmonic number ``H_{N,j}`` for ``0 <= j <= N``.

    ``H_{N,0} = 1``, ``H_{N,1}`` is the ordinary harmonic number and for
    ``j >= 2`` ``H_{N,j} = sum_{m=j}^{N} H_{m-1,j-1} / m``.
    """
    if N < 0 or j < 0 or j > N:
        raise OutOfDomain(f"H_{{N,j}} needs 0 <= j <= N, got N={N}, j={j}")
    if j == 0:
        return Fraction(1)
    if j == 1:
        return sum((Fraction(1, m) for m in range(1, N + 1)), Fraction(0))
    return sum((harmonic(m - 1, j - 1) / m for m in range(j, N + 1)), Fraction(0))


@lru_cache(maxsize=None)
def power_sum(k: int, j: int, N: int) -> int:
    """Generalized Changhee power sum ``S_{k,j}(N)``: j-fold prefix sums of ``(N+1)^k``.

    The only negative index allowed is ``S_{1,-1}(N) = 1``.
    """
    if k < 1 or N < 0:
        raise OutOfDomain(f"S_{{k,j}}(N) needs k >= 1 and N >= 0, got k={k}, N={N}")
    if j == -1:
        if k != 1:
            raise OutOfDomain(f"S_{{k,-1}} is only defined for k = 1, got k={k}")
        return 1
    if j < -1:
        raise OutOfDomain(f"j must be >= -1, got {j}")
    if j == 0:
        return (N + 1) ** k
    # S_{k,j}(N) = S_{k,j}(N-1) + S_{k,j-1}(N), iterated to keep recursion shallow
    total = 0
    for l in range(N + 1):
        total += power_sum(k, j - 1, l)
    return total


def falling(c: int, m: int) -> int:
    """Integer falling factorial ``c (c-1) ... (c-m+1)``; ``falling(c, 0) == 1`` for any c."""
    if m < 0:
        raise OutOfDomain(f"falling factorial length must be >= 0, got {m}")
    out = 1
    for s in range(m):
        out *= c - s
    return out


@lru_cache(maxsize=None)
def falling_factorial(n: int) -> XLPoly:
    """The polynomial ``(x)_n = x (x-1) ... (x-n+1)``, with ``(x)_0 = 1``."""
    if n < 0:
        raise OutOfDomain(f"n must be >= 0, got {n}")
    if n == 0:
        return ONE
    return falling_factorial(n - 1) * (X - (n - 1))


def multinomial(top: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise PartsMismatch(f"negative part in {list(parts)}")
    if sum(parts) != top:
        raise PartsMismatch(f"parts {list(parts)} do not sum to {top}")
    out = math.factorial(top)
    for p in parts:
        out //= math.factorial(p)
    return out
