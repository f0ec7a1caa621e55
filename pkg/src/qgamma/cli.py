"""Command line front end: ``qgamma <subcommand> ...``.

Exit status is 0 on success, 1 when a check fails (refutation, table or
identity mismatch, negative coefficient), and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .bounds import random_crosscheck
from .certify import certify_family, conjecture_smoke, reproduce_tables, threshold
from .exactmath import format_rational, parse_rational
from .quasipoly import quasi_polynomial
from .series import ModulusSet, QuadForm, gamma_series


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"malformed integer list {text!r}") from None


def _moduli(args) -> ModulusSet:
    try:
        return ModulusSet(_int_list(args.moduli))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _quad(args) -> QuadForm:
    try:
        return QuadForm(parse_rational(args.A), parse_rational(args.B))
    except ValueError as exc:
        raise UsageError(f"--A/--B: {exc}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_expand(args) -> int:
    S, q = _moduli(args), _quad(args)
    if args.limit < 0:
        raise UsageError("--limit must be nonnegative")
    coeffs = gamma_series(S, q, args.k, args.limit)
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "gamma"])
        w.writerows(enumerate(coeffs))
    elif args.format == "json":
        _emit({"moduli": list(S.elements), "A": format_rational(q.A), "B": format_rational(q.B),
               "k": args.k, "gamma": list(coeffs)})
    else:
        for n, c in enumerate(coeffs):
            print(n, c)
    return 0


def cmd_threshold(args) -> int:
    S, q = _moduli(args), _quad(args)
    L, N = threshold(S, q, args.k, source=args.source)
    _emit({
        "moduli": list(S.elements),
        "A": format_rational(q.A),
        "B": format_rational(q.B),
        "k": args.k,
        "L": L,
        "N": N,
        "D": format_rational(quasi_polynomial(S).bound_D),
        "source": args.source,
    })
    return 0


def cmd_certify(args) -> int:
    S, q = _moduli(args), _quad(args)
    cert = certify_family(S, q, args.K, max_verify=args.max_verify)
    sys.stdout.write(cert.dumps(include_timings=args.timings) + "\n")
    return 1 if cert.verdict == "refuted" else 0


def cmd_tables(args) -> int:
    rows = reproduce_tables()
    ok = all(r.match for r in rows)
    if args.format == "text":
        for r in rows:
            status = "match" if r.match else "MISMATCH"
            print(f"Z={{{','.join(map(str, r.moduli))}}} (A,B)=({format_rational(r.A)},{format_rational(r.B)}) "
                  f"K={r.K}: {','.join(map(str, r.computed))} [{status}]")
        print(f"{sum(r.match for r in rows)}/{len(rows)} rows match")
    else:
        _emit({"rows": [r.to_json() for r in rows], "matched": sum(r.match for r in rows),
               "total": len(rows), "all_match": ok})
    return 0 if ok else 1


def cmd_quasipoly(args) -> int:
    S = _moduli(args)
    qp = quasi_polynomial(S)
    out = {"moduli": list(S.elements)}
    out.update({name: format_rational(v) for name, v in qp.coefficients.items()})
    out["period"] = qp.period
    out["D"] = format_rational(qp.bound_D)
    _emit(out)
    return 0


def cmd_appendix_check(args) -> int:
    reports = random_crosscheck(args.size, args.trials, args.seed)
    passed = all(r.passed for r in reports)
    mismatched = sorted({name for r in reports for name in r.mismatches})
    _emit({
        "size": args.size,
        "trials": args.trials,
        "seed": args.seed,
        "passed": passed,
        "mismatched_polynomials": mismatched,
        "reports": [r.to_json() for r in reports],
    })
    return 0 if passed else 1


def cmd_smoke(args) -> int:
    q = _quad(args)
    residues = _int_list(args.residues)
    try:
        viol = conjecture_smoke(residues, args.modulus, q, args.k, args.limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"residues": residues, "modulus": args.modulus, "A": format_rational(q.A),
           "B": format_rational(q.B), "k": args.k, "limit": args.limit,
           "violations": [list(v) for v in viol]})
    return 1 if viol else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgamma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_quad(p):
        p.add_argument("--A", required=True, help='rational "p/q" or integer')
        p.add_argument("--B", required=True, help='rational "p/q" or integer')

    p = sub.add_parser("expand", help="dump gamma coefficients")
    p.add_argument("--moduli", required=True)
    with_quad(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("threshold", help="compute L and the cutoff N")
    p.add_argument("--moduli", required=True)
    with_quad(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--source", choices=("derived", "closed-form"), default="derived")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("certify", help="verify every k < K below its cutoff")
    p.add_argument("--moduli", required=True)
    with_quad(p)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--max-verify", type=int, default=None)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("tables", help="recompute the reference cutoff tables")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("quasipoly", help="polynomial part, period and remainder bound")
    p.add_argument("--moduli", required=True)
    p.set_defaults(func=cmd_quasipoly)

    p = sub.add_parser("appendix-check", help="derived vs entered threshold polynomials")
    p.add_argument("--size", type=int, choices=(4, 5), required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_appendix_check)

    p = sub.add_parser("smoke", help="truncated scan of a residue-class product")
    p.add_argument("--residues", required=True)
    p.add_argument("--modulus", type=int, required=True)
    with_quad(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_smoke)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "k", 1) < 1:
            raise UsageError("--k must be at least 1")
        if getattr(args, "K", 2) < 2:
            raise UsageError("--K must be at least 2")
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"qgamma {args.command}: {exc}", file=sys.stderr)
        return 2
