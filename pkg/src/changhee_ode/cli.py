"""Command-line interface.

Usage:
    changhee-ode verify --suite all --format json
    changhee-ode verify --suite thm4 --nmax 4 --kmax 4 --lambda 1/2
    changhee-ode table --harmonic 6 --format csv
    changhee-ode table --coeffs 3 --source closed
    changhee-ode poly --family lambda-changhee --n 3 --x 1/2

``verify`` exits with status 0 only if every checked point passes.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import harness
from .combinatorics import harmonic, power_sum, stirling
from .errors import ChangheeError
from .ode_coeffs import build_table, normalize_source
from .special_polys import FAMILIES, family_polys
from .xlpoly import KEEP, LAM, XLPoly

SUITES = ("all", "background", "thm2", "thm3", "thm4")

# per-suite defaults; --nmax/--kmax/--order override them
DEFAULTS = {
    "background": {"nmax": 15},
    "thm2": {"nmax": 12},
    "thm3": {"nmax": 6, "order": 12},
    "thm4": {"nmax": 4, "kmax": 4},
}


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _lambda_arg(text: str) -> XLPoly:
    if text == "symbolic":
        return LAM
    return XLPoly.const(_fraction(text))


def _int_list(count: int):
    def parse(text: str) -> list[str]:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated values, got {text!r}")
        return parts

    return parse


def run_suites(
    suite: str,
    nmax: int | None = None,
    kmax: int | None = None,
    order: int | None = None,
    lam: XLPoly | None = None,
) -> list[harness.VerificationReport]:
    names = ["background", "thm2", "thm3", "thm4"] if suite == "all" else [suite]
    reports = []
    for name in names:
        d = DEFAULTS[name]
        n = nmax if nmax is not None else d["nmax"]
        if name == "background":
            reports.append(harness.background_checks(n))
        elif name == "thm2":
            reports.append(harness.thm2_check(n))
        elif name == "thm3":
            lams = None if lam is None else [lam]
            reports.append(harness.thm3_check(n, order if order is not None else d["order"], lams))
        else:
            k = kmax if kmax is not None else d["kmax"]
            reports.append(harness.thm4_check(n, k, order, LAM if lam is None else lam))
    return reports


def render_reports(reports: Sequence[harness.VerificationReport], fmt: str) -> str:
    all_pass = all(r.all_pass for r in reports)
    if fmt == "json":
        doc = {"all_pass": all_pass, "reports": [r.to_json_obj() for r in reports]}
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    lines = [r.to_text() for r in reports]
    lines.append("ALL PASS" if all_pass else "SOME CHECKS FAILED")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suites(args.suite, args.nmax, args.kmax, args.order, args.lam)
    _emit(render_reports(reports, args.format), args.out)
    return 0 if all(r.all_pass for r in reports) else 1


def _rows_to_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _rows_to_json(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    return json.dumps([dict(zip(header, map(str, row))) for row in rows], separators=(",", ":")) + "\n"


def cmd_table(args: argparse.Namespace) -> int:
    fmt = args.format
    if args.coeffs is not None:
        table = build_table(args.coeffs, args.source)
        if fmt == "json":
            return _write(json.dumps(table.to_json_obj(), separators=(",", ":")) + "\n", args.out)
        rows = [(i, j, str(table[i, j])) for i, j in table.indices()]
        return _write(_rows_to_csv(("i", "j", "poly"), rows), args.out)

    if args.harmonic is not None:
        header = ("N", "j", "value")
        rows = [(n, j, harmonic(n, j)) for n in range(args.harmonic + 1) for j in range(n + 1)]
    elif args.powersum is not None:
        k, j, N = (int(v) for v in args.powersum)
        header = ("k", "j", "N", "value")
        rows = [(k, j, n, power_sum(k, j, n)) for n in range(N + 1)]
    else:
        kind, n = args.stirling
        n = int(n)
        header = ("n", "k", "value")
        rows = [(m, k, stirling(kind, m, k)) for m in range(n + 1) for k in range(m + 1)]
    text = _rows_to_json(header, rows) if fmt == "json" else _rows_to_csv(header, rows)
    return _write(text, args.out)


def _write(text: str, out: str | None) -> int:
    _emit(text, out)
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    p = family_polys(args.family, args.n)[args.n]
    p = p.substitute(
        x=KEEP if args.x is None else args.x,
        lam=KEEP if args.lam is None else args.lam,
    )
    if args.format == "json":
        return _write(p.to_json() + "\n", None)
    return _write(str(p) + "\n", None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="changhee-ode",
        description="Exact verification of identities for lambda-Changhee polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--nmax", type=int)
    v.add_argument("--kmax", type=int)
    v.add_argument("--order", type=int, help="series truncation order")
    v.add_argument("--lambda", dest="lam", type=_lambda_arg, metavar="p/q|symbolic")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--out", metavar="PATH")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print a table of numbers or ODE coefficients")
    g = t.add_mutually_exclusive_group(required=True)
    g.add_argument("--harmonic", type=int, metavar="N")
    g.add_argument("--powersum", type=_int_list(3), metavar="k,j,N")
    g.add_argument("--stirling", type=_int_list(2), metavar="kind,n")
    g.add_argument("--coeffs", type=int, metavar="N")
    t.add_argument("--source", type=normalize_source, default="recurrence")
    t.add_argument("--format", choices=("json", "csv"))
    t.add_argument("--out", metavar="PATH")
    t.set_defaults(func=cmd_table)

    p = sub.add_parser("poly", help="print one polynomial of a family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_fraction, metavar="p/q")
    p.add_argument("--lambda", dest="lam", type=_fraction, metavar="p/q")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_poly)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table" and args.format is None:
        args.format = "json" if args.coeffs is not None else "csv"
    try:
        return args.func(args)
    except (ChangheeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
