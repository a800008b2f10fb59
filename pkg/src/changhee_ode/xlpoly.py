"""Sparse polynomials in ``x`` with Laurent powers of ``lambda`` over the rationals.

An :class:`XLPoly` is a finite sum of terms ``c * x**a * lam**b`` with ``a >= 0``,
``b`` any integer and ``c`` a nonzero :class:`fractions.Fraction`.  Zero
coefficients are never stored, so two polynomials are equal exactly when their
term maps are equal.

    >>> p = (X - 1) * X
    >>> p
    XLPoly('x^2 - x')
    >>> LAM * LAM ** -1 == ONE
    True
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import NegativeLaurentAtZero, NotAUnit

Rational = Union[int, Fraction]
Key = tuple[int, int]

__all__ = [
    "XLPoly",
    "ZERO",
    "ONE",
    "X",
    "LAM",
    "xlp_add",
    "xlp_mul",
    "xlp_invert_monomial",
    "xlp_substitute",
    "xlp_sum",
    "KEEP",
]


class _Keep:
    def __repr__(self) -> str:
        return "KEEP"


#: Sentinel for :func:`xlp_substitute` meaning "leave this variable symbolic".
KEEP = _Keep()


class XLPoly:
    """Immutable element of Q[x][lam, 1/lam] stored as ``{(xdeg, ldeg): coeff}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Rational] | None = None):
        clean: dict[Key, Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0:
                    raise ValueError(f"negative x-degree {a}")
                if c:
                    clean[(int(a), int(b))] = Fraction(c)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Key, Fraction]) -> XLPoly:
        # terms must already be canonical (Fraction values, no zeros)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Rational) -> XLPoly:
        return cls._raw({(0, 0): Fraction(c)} if c else {})

    @classmethod
    def monomial(cls, c: Rational, xdeg: int = 0, ldeg: int = 0) -> XLPoly:
        return cls({(xdeg, ldeg): c})

    @classmethod
    def coerce(cls, value: XLPoly | Rational) -> XLPoly:
        if isinstance(value, XLPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to XLPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Key, Fraction]:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Key, Fraction]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0), Fraction(0))

    def coeff(self, xdeg: int, ldeg: int = 0) -> Fraction:
        return self._terms.get((xdeg, ldeg), Fraction(0))

    def x_degree(self) -> int:
        """Largest power of x, or -1 for the zero polynomial."""
        return max((a for a, _ in self._terms), default=-1)

    def lambda_degrees(self) -> tuple[int, int]:
        """(min, max) power of lambda; raises on the zero polynomial."""
        ls = [b for _, b in self._terms]
        if not ls:
            raise ValueError("zero polynomial has no lambda degrees")
        return min(ls), max(ls)

    def has_lambda(self) -> bool:
        return any(b for _, b in self._terms)

    def x_leading_coeff(self) -> XLPoly:
        """Coefficient (a Laurent polynomial in lambda) of the top power of x."""
        d = self.x_degree()
        return XLPoly._raw({(0, b): c for (a, b), c in self._terms.items() if a == d})

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: XLPoly | Rational) -> XLPoly:
        try:
            other = XLPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s += c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return XLPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> XLPoly:
        return XLPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: XLPoly | Rational) -> XLPoly:
        try:
            other = XLPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: XLPoly | Rational) -> XLPoly:
        return XLPoly.coerce(other) - self

    def scale(self, c: Rational) -> XLPoly:
        if not c:
            return ZERO
        c = Fraction(c)
        return XLPoly._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: XLPoly | Rational) -> XLPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, XLPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((ka, ca),) = a.items()
            if ka == (0, 0):
                return XLPoly._raw({k: c * ca for k, c in b.items()})
            xa, la = ka
            return XLPoly._raw({(x + xa, l + la): c * ca for (x, l), c in b.items()})
        out: dict[Key, Fraction] = {}
        get = out.get
        for (xa, la), ca in a.items():
            for (xb, lb), cb in b.items():
                k = (xa + xb, la + lb)
                out[k] = get(k, 0) + ca * cb
        return XLPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> XLPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, XLPoly):
            return self * other.invert_monomial()
        return NotImplemented

    def __pow__(self, e: int) -> XLPoly:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.invert_monomial() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert_monomial(self) -> XLPoly:
        if len(self._terms) != 1:
            raise NotAUnit(f"{self} is not a single lambda-monomial")
        ((a, b), c), = self._terms.items()
        if a != 0:
            raise NotAUnit(f"{self} involves x and is not invertible")
        return XLPoly._raw({(0, -b): 1 / c})

    def substitute(self, x: Rational | _Keep = KEEP, lam: Rational | _Keep = KEEP) -> XLPoly:
        """Evaluate x and/or lambda at rational values, keeping the rest symbolic."""
        if x is KEEP and lam is KEEP:
            return self
        xv = None if x is KEEP else Fraction(x)
        lv = None if lam is KEEP else Fraction(lam)
        if lv == 0 and any(b < 0 for _, b in self._terms):
            raise NegativeLaurentAtZero(f"{self} has a pole at lambda = 0")
        out: dict[Key, Fraction] = {}
        for (a, b), c in self._terms.items():
            if xv is not None:
                c = c * xv**a
                a = 0
            if lv is not None:
                c = c * lv**b if b else c
                b = 0
            k = (a, b)
            out[k] = out.get(k, 0) + c
        return XLPoly._raw({k: c for k, c in out.items() if c})

    # -- equality / hashing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = XLPoly.const(other)
        if not isinstance(other, XLPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                # agree with hash(Fraction) since constants compare equal to numbers
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"x": a, "l": b, "n": str(c.numerator), "d": str(c.denominator)}
                for (a, b), c in sorted(self._terms.items())
            ]
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> XLPoly:
        terms: dict[Key, Fraction] = {}
        for t in obj["terms"]:
            k = (int(t["x"]), int(t["l"]))
            if k in terms:
                raise ValueError(f"duplicate term {k}")
            d = int(t["d"])
            if d <= 0:
                raise ValueError("denominator must be positive")
            terms[k] = Fraction(int(t["n"]), d)
        return cls(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> XLPoly:
        return cls.from_json_obj(json.loads(text))

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            factors = []
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("lam" if b == 1 else f"lam^{b}")
            mag = abs(c)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"XLPoly({str(self)!r})"


ZERO = XLPoly._raw({})
ONE = XLPoly._raw({(0, 0): Fraction(1)})
X = XLPoly._raw({(1, 0): Fraction(1)})
LAM = XLPoly._raw({(0, 1): Fraction(1)})


def xlp_add(a: XLPoly, b: XLPoly) -> XLPoly:
    return a + b


def xlp_mul(a: XLPoly, b: XLPoly) -> XLPoly:
    return a * b


def xlp_invert_monomial(m: XLPoly) -> XLPoly:
    """Inverse of ``c * lam**b`` (``c != 0``); anything else raises :class:`NotAUnit`."""
    return m.invert_monomial()


def xlp_substitute(p: XLPoly, xval: Rational | _Keep = KEEP, lval: Rational | _Keep = KEEP) -> XLPoly:
    return p.substitute(x=xval, lam=lval)


def xlp_sum(polys: Iterable[XLPoly]) -> XLPoly:
    out: dict[Key, Fraction] = {}
    for p in polys:
        for k, c in p._terms.items():
            out[k] = out.get(k, 0) + c
    return XLPoly._raw({k: c for k, c in out.items() if c})
