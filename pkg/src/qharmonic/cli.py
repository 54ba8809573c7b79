"""Command-line front end.

Exit codes: 0 success, 1 a verification cell failed, 2 usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import IndexOutOfRange, InvalidDimension, SpaceMismatch, make_space
from .harmonic import (DecompositionError, DegreeMismatch, NotHomogeneous, dim_full, dim_harmonic,
                       project, t_poly, xi_basis, zonal)
from .scalar import PoleAtPoint
from .sphere import gram, inner
from .textio import (ParseError, format_poly, matrix_to_json, parse_poly, parse_scalar,
                     poly_to_json)
from .verify import DEFAULT_SEED, SUITES, report_ok, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> list:
    """"3..5" -> [3, 4, 5]; "3,5" -> [3, 5]; "4" -> [4]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected e.g. 3..5, 3,4 or 4") from None


def _emit(args, text, data):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def cmd_dims(args):
    if args.N < 2 or args.m < 0:
        raise UsageError("need N >= 2 and m >= 0")
    a, h = dim_full(args.N, args.m), dim_harmonic(args.N, args.m)
    _emit(args, f"dim A_m = {a}, dim H_m = {h}", {"N": args.N, "m": args.m, "dim_A": a, "dim_H": h})
    return EXIT_OK


def cmd_project(args):
    p = parse_poly(args.expr, make_space(args.N))
    h = project(p)
    _emit(args, format_poly(h), poly_to_json(h))
    return EXIT_OK


def cmd_zonal(args):
    p = zonal(args.N, args.m1, args.m1p)
    _emit(args, format_poly(p), poly_to_json(p))
    return EXIT_OK


def cmd_tpoly(args):
    p = t_poly(args.N, args.m, args.m1, args.m1p, args.l)
    _emit(args, format_poly(p), poly_to_json(p))
    return EXIT_OK


def cmd_basis(args):
    items = xi_basis(args.N, args.m)
    text = "\n".join(f"{lab}: {format_poly(p)}" for lab, p in items)
    data = {"N": args.N, "m": args.m,
            "basis": [{"label": lab.as_dict(), "poly": poly_to_json(p)} for lab, p in items]}
    _emit(args, text, data)
    return EXIT_OK


def cmd_gram(args):
    items = xi_basis(args.N, args.m)
    G = gram([p for _, p in items])
    lines = [f"G[{i}][{j}] = {G[i][j]}" for i in range(len(G)) for j in range(len(G))
             if i == j or not G[i][j].is_zero()]
    data = matrix_to_json(G)
    data["labels"] = [str(lab) for lab, _ in items]
    _emit(args, "\n".join(lines) if lines else "(empty)", data)
    return EXIT_OK


def cmd_inner(args):
    sp = make_space(args.N)
    v = inner(parse_poly(args.expr1, sp), parse_poly(args.expr2, sp))
    _emit(args, str(v), {"value": str(v)})
    return EXIT_OK


def cmd_eval(args):
    s = parse_scalar(args.expr)
    try:
        t0 = Fraction(args.t0)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad --t0 value {args.t0!r}") from None
    v = s.eval_at(t0)
    _emit(args, str(v), {"expr": str(s), "t0": str(t0), "value": str(v)})
    return EXIT_OK


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}")
    Ns = parse_range(args.N) if args.N else None
    if Ns is not None and any(N < 3 for N in Ns):
        raise UsageError("verification suites need N >= 3")
    if args.deg is not None and args.deg < 0:
        raise UsageError("--deg must be >= 0")
    reports = [run_suite(name, Ns=Ns, deg=args.deg, seed=args.seed) for name in names]
    ok = all(report_ok(r) for r in reports)
    if args.json:
        print(json.dumps(reports if args.suite == "all" else reports[0], sort_keys=True))
    else:
        for r in reports:
            for c in r["cells"]:
                print(f"{'PASS' if c['ok'] else 'FAIL'} {r['suite']} {c['id']}: {c['detail']}")
        total = sum(len(r["cells"]) for r in reports)
        failed = sum(1 for r in reports for c in r["cells"] if not c["ok"])
        print(f"{total - failed}/{total} cells passed")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    # --json is accepted before or after the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    ap = argparse.ArgumentParser(prog="qharmonic",
                                 description="q-harmonic polynomials on quantum Euclidean space")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="dim A_m and dim H_m")
    p.add_argument("N", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("project", parents=[common], help="harmonic projection of a homogeneous polynomial")
    p.add_argument("N", type=int)
    p.add_argument("expr")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("zonal", parents=[common], help="zonal polynomial")
    for name in ("N", "m1", "m1p"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_zonal)

    p = sub.add_parser("tpoly", parents=[common], help="t-polynomial")
    for name in ("N", "m", "m1", "m1p", "l"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_tpoly)

    p = sub.add_parser("basis", parents=[common], help="separated-variable basis of H_m")
    p.add_argument("N", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix of the basis of H_m")
    p.add_argument("N", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("inner", parents=[common], help="scalar product of two polynomials")
    p.add_argument("N", type=int)
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.set_defaults(func=cmd_inner)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help="all, " + ", ".join(SUITES))
    p.add_argument("--N", help="dimensions, e.g. 3..5")
    p.add_argument("--deg", type=int, help="degree bound")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", parents=[common], help="evaluate a scalar at t = t0 (t = q^(1/2))")
    p.add_argument("expr")
    p.add_argument("--t0", required=True)
    p.set_defaults(func=cmd_eval)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError, IndexOutOfRange, InvalidDimension, SpaceMismatch,
            NotHomogeneous, DegreeMismatch, PoleAtPoint) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DecompositionError, AssertionError, ArithmeticError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
