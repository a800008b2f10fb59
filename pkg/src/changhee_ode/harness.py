"""Exact verification of the identities around lambda-Changhee polynomials.

Each check compares a left-hand side with a right-hand side as ``XLPoly``
values (integers and series are lifted into the same ring) and records the
exact difference for every failing parameter point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Mapping, Sequence

from .combinatorics import StirlingFn, falling, harmonic, multinomial, power_sum, stirling
from .ode_coeffs import (
    BASE_VALUES,
    CLOSED_FORM,
    RECURRENCE,
    CoeffTable,
    build_table,
    coeffs_by_closed_form,
    coeffs_by_recurrence,
    ode_residual,
)
from .series import TruncatedSeries, log1p_lambda_t, ts_int_power
from .special_polys import (
    PolySequence,
    changhee_polys,
    convert_changhee_from_euler,
    convert_euler_from_changhee,
    euler_polys,
    lambda_changhee_polys,
)
from .xlpoly import LAM, ONE, ZERO, XLPoly, xlp_sum

PASS = "PASS"
FAIL = "FAIL"

Value = XLPoly | TruncatedSeries


def _lift(v: Value | int | Fraction) -> Value:
    if isinstance(v, (XLPoly, TruncatedSeries)):
        return v
    return XLPoly.const(v)


def _value_json(v: Value) -> Any:
    return v.to_json_obj()


def _point_key(point: Mapping[str, Any]) -> tuple:
    return tuple((k, (0, v, "") if isinstance(v, int) else (1, 0, str(v))) for k, v in sorted(point.items()))


@dataclass(frozen=True)
class PointResult:
    point: Mapping[str, Any]
    lhs: Value
    rhs: Value
    diff: Value

    @property
    def passed(self) -> bool:
        return self.diff.is_zero()

    def to_json_obj(self) -> dict:
        out: dict[str, Any] = {"point": dict(sorted(self.point.items())), "status": PASS if self.passed else FAIL}
        if not self.passed:
            out["lhs"] = _value_json(self.lhs)
            out["rhs"] = _value_json(self.rhs)
            out["diff"] = _value_json(self.diff)
        return out


def compare(point: Mapping[str, Any], lhs, rhs) -> PointResult:
    lhs, rhs = _lift(lhs), _lift(rhs)
    return PointResult(dict(point), lhs, rhs, lhs - rhs)


@dataclass
class VerificationReport:
    identity_id: str
    results: list[PointResult] = field(default_factory=list)

    def add(self, point: Mapping[str, Any], lhs, rhs) -> PointResult:
        res = compare(point, lhs, rhs)
        self.results.append(res)
        return res

    def extend(self, other: VerificationReport) -> None:
        self.results.extend(other.results)

    def sorted_results(self) -> list[PointResult]:
        return sorted(self.results, key=lambda r: _point_key(r.point))

    @property
    def grid(self) -> list[Mapping[str, Any]]:
        return [r.point for r in self.sorted_results()]

    @property
    def n_pass(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def n_fail(self) -> int:
        return len(self.results) - self.n_pass

    @property
    def all_pass(self) -> bool:
        return self.n_fail == 0

    def failures(self) -> list[PointResult]:
        return [r for r in self.sorted_results() if not r.passed]

    def first_failure(self) -> PointResult | None:
        fails = self.failures()
        return fails[0] if fails else None

    def summary(self) -> dict[str, int]:
        return {"total": len(self.results), "pass": self.n_pass, "fail": self.n_fail}

    def to_json_obj(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "summary": self.summary(),
            "results": [r.to_json_obj() for r in self.sorted_results()],
        }

    def to_text(self) -> str:
        s = self.summary()
        status = PASS if self.all_pass else FAIL
        lines = [f"{status} {self.identity_id}: {s['pass']}/{s['total']} points pass"]
        for r in self.failures():
            pt = ", ".join(f"{k}={v}" for k, v in sorted(r.point.items()))
            lines.append(f"  FAIL [{pt}]")
            lines.append(f"    lhs  = {_value_text(r.lhs)}")
            lines.append(f"    rhs  = {_value_text(r.rhs)}")
            lines.append(f"    diff = {_value_text(r.diff)}")
        return "\n".join(lines)


def _value_text(v: Value) -> str:
    if isinstance(v, TruncatedSeries):
        terms = [f"({c})*t^{n}" for n, c in enumerate(v.coeffs) if c]
        return (" + ".join(terms) or "0") + f" + O(t^{v.order + 1})"
    return str(v)


# -- the explicit identity for Ch_{k+N} ----------------------------------------


class _LamPowers:
    def __init__(self, lam: XLPoly):
        self.lam = lam
        self._cache = [ONE]

    def __call__(self, e: int) -> XLPoly:
        if e < 0:
            raise AssertionError(f"negative lambda exponent {e}")
        while len(self._cache) <= e:
            self._cache.append(self._cache[-1] * self.lam)
        return self._cache[e]


def thm4_rhs(
    N: int,
    k: int,
    polys: PolySequence,
    table: CoeffTable,
    lam: XLPoly = LAM,
    stirling_fn: StirlingFn = stirling,
) -> XLPoly:
    """Evaluate the printed nested sum claimed to equal ``Ch_{k+N,lam}(x)``.

    ``polys`` must hold ``Ch_{s,lam}`` for ``s <= k`` and ``table`` the
    coefficients ``a_{i,r-i}(N, x)``.  Falling factorials of integers are
    literal products, so ``(-1)_0 = 1`` and ``(m-1)_m = 0`` for ``m >= 1``.
    """
    if table.N != N:
        raise ValueError(f"table is for N={table.N}, not {N}")
    lp = _LamPowers(lam)
    s1 = lambda n, m: stirling_fn("first", n, m)  # noqa: E731

    inner_cache: dict[tuple[int, int, int], XLPoly] = {}

    def inner(m: int, n: int, a: int) -> XLPoly:
        key = (m, n, a)
        if key not in inner_cache:
            acc = []
            for l in range(a + 1):
                for e in range(a - l + 1):
                    for f in range(a - l - e + 1):
                        s = a - l - e - f
                        c = Fraction(
                            (-1) ** l * multinomial(a, [l, e, f, s]),
                            comb(e + m, m) * comb(f + n, n),
                        )
                        c *= falling(N + l - 1, l) * s1(e + m, m) * s1(f + n, n)
                        if c:
                            acc.append(polys[s] * lp(a - s) * c)
            inner_cache[key] = xlp_sum(acc)
        return inner_cache[key]

    terms = []
    for r in range(1, N + 1):
        for i in range(r + 1):
            a_ir = table[i, r - i]
            if not a_ir:
                continue
            middle = []
            for m in range(k + 1):
                for n in range(k - m + 1):
                    a = k - m - n
                    c = Fraction(multinomial(k, [m, n, a])) * Fraction(-1, 2) ** m * (-1) ** n
                    c *= falling(i + m - 1, m) * falling(r + n - i - 1, n)
                    if c:
                        middle.append(inner(m, n, a) * c)
            terms.append(a_ir * lp(N - r) * xlp_sum(middle) * Fraction(1, 2**i))
    return xlp_sum(terms)


def thm4_check(
    nmax: int = 4,
    kmax: int = 4,
    order: int | None = None,
    lam: XLPoly = LAM,
    stirling_fn: StirlingFn = stirling,
) -> VerificationReport:
    """Compare ``Ch_{k+N,lam}`` (from the generating function) with :func:`thm4_rhs`
    for ``1 <= N <= nmax`` and ``0 <= k <= kmax``."""
    if order is None:
        order = nmax + kmax + 2
    polys = lambda_changhee_polys(nmax + kmax, order, lam)
    report = VerificationReport("changhee-explicit-identity")
    for N in range(1, nmax + 1):
        table = coeffs_by_closed_form(N)
        for k in range(kmax + 1):
            report.add({"N": N, "k": k}, polys[k + N], thm4_rhs(N, k, polys, table, lam, stirling_fn))
    return report


# -- coefficient tables and the ODE --------------------------------------------


def thm2_check(nmax: int = 12, base: Mapping | None = None) -> VerificationReport:
    """Recurrence table against closed-form table, entry by entry, for ``1 <= N <= nmax``."""
    report = VerificationReport("coeffs-dual-construction")
    for N in range(1, nmax + 1):
        rec = coeffs_by_recurrence(N, base)
        closed = coeffs_by_closed_form(N)
        for i, j in closed.indices():
            report.add({"N": N, "i": i, "j": j}, rec[i, j], closed[i, j])
    return report


def lambda_label(lam: XLPoly) -> str:
    if lam == LAM:
        return "symbolic"
    return str(lam.constant_value())


def thm3_check(
    nmax: int = 6,
    order: int = 12,
    lams: Sequence[XLPoly] | None = None,
    sources: Sequence[str] = (CLOSED_FORM, RECURRENCE),
    base: Mapping | None = None,
) -> VerificationReport:
    """ODE residual ``F^(N) - rhs`` for every N, lambda value and table source."""
    if lams is None:
        lams = [LAM, XLPoly.const(Fraction(1, 2)), XLPoly.const(1), XLPoly.const(3)]
    report = VerificationReport("ode-residual")
    for N in range(1, nmax + 1):
        for source in sources:
            if source == RECURRENCE:
                table = coeffs_by_recurrence(N, base)
            else:
                table = build_table(N, source)
            for lam in lams:
                resid = ode_residual(N, order, lam=lam, table=table)
                zero = TruncatedSeries([ZERO], resid.order)
                # lhs is the residual itself; a FAIL carries the full series
                report.add({"N": N, "lambda": lambda_label(lam), "source": source}, resid, zero)
    return report


# -- background identities -----------------------------------------------------

BACKGROUND_DEFAULTS = {
    "conversion_nmax": 15,
    "log_gf_nmax": 6,
    "log_gf_mmax": 10,
    "orthogonality_nmax": 12,
    "powersum_Nmax": 30,
    "harmonic_Nmax": 20,
    "degeneration_nmax": 20,
}


def check_euler_from_changhee(nmax: int, stirling_fn: StirlingFn = stirling) -> VerificationReport:
    report = VerificationReport("euler-from-changhee")
    direct = euler_polys(nmax)
    converted = convert_euler_from_changhee(changhee_polys(nmax), stirling_fn)
    for n in range(nmax + 1):
        report.add({"n": n}, direct[n], converted[n])
    return report


def check_changhee_from_euler(nmax: int, stirling_fn: StirlingFn = stirling) -> VerificationReport:
    report = VerificationReport("changhee-from-euler")
    direct = changhee_polys(nmax)
    converted = convert_changhee_from_euler(euler_polys(nmax), stirling_fn)
    for n in range(nmax + 1):
        report.add({"n": n}, direct[n], converted[n])
    return report


def check_stirling_log_gf(nmax: int = 6, mmax: int = 10, stirling_fn: StirlingFn = stirling) -> VerificationReport:
    """``m! [t^m] log(1+t)^n / n! = S1(m, n)``."""
    report = VerificationReport("stirling1-log-gf")
    L = log1p_lambda_t(mmax, XLPoly.const(1))
    for n in range(nmax + 1):
        Ln = ts_int_power(L, n)
        for m in range(mmax + 1):
            lhs = Ln[m] * Fraction(factorial(m), factorial(n))
            report.add({"n": n, "m": m}, lhs, stirling_fn("first", m, n))
    return report


def check_stirling_orthogonality(nmax: int = 12, stirling_fn: StirlingFn = stirling) -> VerificationReport:
    report = VerificationReport("stirling-orthogonality")
    for n in range(nmax + 1):
        for k in range(n + 1):
            total = sum(stirling_fn("first", n, m) * stirling_fn("second", m, k) for m in range(k, n + 1))
            report.add({"n": n, "k": k}, total, 1 if n == k else 0)
    return report


def check_powersum_step(Nmax: int = 30) -> VerificationReport:
    """``S_{1,i-1}(r-1-i) + S_{1,i-2}(r-i) = S_{1,i-1}(r-i)`` for ``2 <= r <= N <= Nmax``, ``1 <= i <= r-1``."""
    report = VerificationReport("powersum-step")
    for N in range(2, Nmax + 1):
        for r in range(2, N + 1):
            for i in range(1, r):
                lhs = power_sum(1, i - 1, r - 1 - i) + power_sum(1, i - 2, r - i)
                report.add({"N": N, "r": r, "i": i}, lhs, power_sum(1, i - 1, r - i))
    return report


def check_harmonic_diagonal(Nmax: int = 20) -> VerificationReport:
    report = VerificationReport("harmonic-diagonal")
    for N in range(Nmax + 1):
        report.add({"N": N}, harmonic(N, N), Fraction(1, factorial(N)))
    return report


def check_lambda_degeneration(nmax: int = 20) -> VerificationReport:
    """lambda-Changhee entries at ``lam = 0`` against the classical Changhee entries."""
    report = VerificationReport("lambda-zero-degeneration")
    degenerate = lambda_changhee_polys(nmax)
    classical = changhee_polys(nmax)
    for n in range(nmax + 1):
        report.add({"n": n}, degenerate[n].substitute(lam=0), classical[n])
    return report


def background_checks(
    nmax: int | None = None,
    stirling_fn: StirlingFn = stirling,
    **limits: int,
) -> VerificationReport:
    """All classical identities in one report; each point is tagged with its identity.

    ``nmax`` sets the range of the Euler/Changhee conversions; the other ranges
    come from :data:`BACKGROUND_DEFAULTS` unless overridden by keyword.
    """
    cfg = dict(BACKGROUND_DEFAULTS)
    if nmax is not None:
        cfg["conversion_nmax"] = nmax
    unknown = set(limits) - set(cfg)
    if unknown:
        raise TypeError(f"unknown limits: {sorted(unknown)}")
    cfg.update(limits)

    parts = [
        check_euler_from_changhee(cfg["conversion_nmax"], stirling_fn),
        check_changhee_from_euler(cfg["conversion_nmax"], stirling_fn),
        check_stirling_log_gf(cfg["log_gf_nmax"], cfg["log_gf_mmax"], stirling_fn),
        check_stirling_orthogonality(cfg["orthogonality_nmax"], stirling_fn),
        check_powersum_step(cfg["powersum_Nmax"]),
        check_harmonic_diagonal(cfg["harmonic_Nmax"]),
        check_lambda_degeneration(cfg["degeneration_nmax"]),
    ]
    report = VerificationReport("background")
    for part in parts:
        for res in part.results:
            report.results.append(
                PointResult({"identity": part.identity_id, **res.point}, res.lhs, res.rhs, res.diff)
            )
    return report


def perturbed_stirling(kind: str, n: int, k: int, delta: int = 1) -> StirlingFn:
    """A Stirling provider identical to :func:`stirling` except at one entry."""
    from .combinatorics import _kind

    target = (_kind(kind), n, k)

    def fn(kind_: str, n_: int, k_: int) -> int:
        v = stirling(kind_, n_, k_)
        if (_kind(kind_), n_, k_) == target:
            v += delta
        return v

    return fn


def perturbed_base(ij: tuple[int, int], delta: XLPoly | int = 1) -> dict:
    base = dict(BASE_VALUES)
    base[ij] = base.get(ij, ZERO) + delta
    return base


__all__ = [
    "PASS",
    "FAIL",
    "PointResult",
    "VerificationReport",
    "thm4_rhs",
    "thm4_check",
    "thm2_check",
    "thm3_check",
    "background_checks",
    "check_euler_from_changhee",
    "check_changhee_from_euler",
    "check_stirling_log_gf",
    "check_stirling_orthogonality",
    "check_powersum_step",
    "check_harmonic_diagonal",
    "check_lambda_degeneration",
    "perturbed_stirling",
    "perturbed_base",
    "lambda_label",
]
