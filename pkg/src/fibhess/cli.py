"""Command-line front end.

Subcommands: ``gen`` (one polynomial by a chosen route), ``family``
(named specializations), ``check`` (the five-way agreement grid), and
``matrix`` (print a built matrix).  The user-facing index n always means
the n-th sequence term; matrix routes build the (n-1) x (n-1) matrix
internally so every method answers the same question.

Exit codes: 0 success / all checks passed, 1 check failure, 2 usage
error, 3 brute-force oracle budget exceeded.

JSON coefficients are decimal strings: they outgrow 64-bit integers
quickly as n increases.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .evaluators import (
    BudgetExceeded,
    EvalBudget,
    det_hessenberg,
    det_oracle,
    per_hessenberg,
    per_oracle,
)
from .matrices import HessenbergMatrix, build_h, build_k, build_m, build_w
from .ring import ONE, BivarPoly
from .sequences import FAMILIES, cross_check, f_poly, family_value, get_family

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_BUILDERS: dict[str, Callable[[int, int], HessenbergMatrix]] = {
    "w": build_w,
    "m": build_m,
    "h": build_h,
    "k": build_k,
}

METHODS = (
    "recurrence",
    "det-w",
    "det-m",
    "per-h",
    "per-k",
    "oracle-det-w",
    "oracle-per-h",
)


class UsageError(Exception):
    pass


def poly_terms_json(poly: BivarPoly) -> list[dict[str, object]]:
    return [
        {"xexp": xe, "yexp": ye, "re": str(c.re), "im": str(c.im)}
        for (xe, ye), c in poly.terms()
    ]


def poly_from_terms_json(terms: list[dict]) -> BivarPoly:
    """Rebuild a polynomial from the JSON term-list encoding."""
    from .ring import GaussianInt

    return BivarPoly(
        {
            (int(t["xexp"]), int(t["yexp"])): GaussianInt(int(t["re"]), int(t["im"]))
            for t in terms
        }
    )


def _compute_by_method(p: int, n: int, method: str) -> BivarPoly:
    if method == "recurrence":
        return f_poly(p, n)
    # Matrix routes: the order-(n-1) matrix yields the n-th term; the
    # empty 0x0 matrix has det = per = 1 and is handled without a
    # matrix object.
    if n < 1:
        raise UsageError(f"method {method!r} requires n >= 1 (term 0 is 0)")
    order = n - 1
    if order == 0:
        return ONE
    if method == "det-w":
        return det_hessenberg(build_w(p, order))
    if method == "det-m":
        return det_hessenberg(build_m(p, order))
    if method == "per-h":
        return per_hessenberg(build_h(p, order))
    if method == "per-k":
        return per_hessenberg(build_k(p, order))
    if method == "oracle-det-w":
        return det_oracle(build_w(p, order), EvalBudget())
    if method == "oracle-per-h":
        return per_oracle(build_h(p, order), EvalBudget())
    raise UsageError(f"unknown method {method!r}")


def _emit_poly(poly: BivarPoly, fmt: str, record: dict[str, object]) -> None:
    if fmt == "json":
        record["poly"] = poly_terms_json(poly)
        print(json.dumps(record))
    else:
        print(poly)


def _cmd_gen(args) -> int:
    poly = _compute_by_method(args.p, args.n, args.method)
    _emit_poly(poly, args.format, {"p": args.p, "n": args.n, "method": args.method})
    return EXIT_OK


def _cmd_family(args) -> int:
    try:
        spec = get_family(args.name)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    poly = family_value(spec, args.n, p=args.p)
    _emit_poly(
        poly,
        args.format,
        {
            "family": spec.name,
            "p": spec.p if spec.p is not None else args.p,
            "n": args.n,
        },
    )
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.p_max < 1 or args.n_max < 1:
        raise UsageError("--p-max and --n-max must be >= 1")
    total = 0
    passed = 0
    first_failure = None
    for p in range(1, args.p_max + 1):
        for n in range(1, args.n_max + 1):
            report = cross_check(p, n)
            total += 1
            if report.all_equal:
                passed += 1
            elif first_failure is None:
                first_failure = report
            if args.format == "json":
                print(
                    json.dumps(
                        {
                            "p": report.p,
                            "n": report.n,
                            "all_equal": report.all_equal,
                            "first_mismatch": list(report.first_mismatch)
                            if report.first_mismatch
                            else None,
                            "values": {
                                route: poly_terms_json(poly)
                                for route, poly in report.values.items()
                            },
                        }
                    )
                )
    if args.format != "json":
        noun = "check" if total == 1 else "checks"
        print(f"{total} {noun}, {passed} passed")
        if first_failure is not None:
            a, b = first_failure.first_mismatch
            print(
                f"FAIL at p={first_failure.p}, n={first_failure.n}: "
                f"{a} != {b}",
                file=sys.stderr,
            )
    return EXIT_OK if first_failure is None else EXIT_CHECK_FAILED


def _cmd_matrix(args) -> int:
    builder = _BUILDERS[args.kind]
    print(builder(args.p, args.order))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibhess",
        description="Exact bivariate Fibonacci-type polynomials via "
        "recurrence and Hessenberg determinant/permanent routes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="compute one sequence term by a chosen route")
    gen.add_argument("--p", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--method", choices=METHODS, default="recurrence")
    gen.add_argument("--format", choices=("text", "json"), default="text")
    gen.set_defaults(func=_cmd_gen)

    fam = sub.add_parser("family", help="compute a named specialization")
    fam.add_argument("--name", required=True)
    fam.add_argument("--n", type=int, required=True)
    fam.add_argument("--p", type=int, default=None)
    fam.add_argument("--format", choices=("text", "json"), default="text")
    fam.set_defaults(func=_cmd_family)

    chk = sub.add_parser("check", help="run the five-way agreement grid")
    chk.add_argument("--p-max", type=int, required=True)
    chk.add_argument("--n-max", type=int, required=True)
    chk.add_argument("--format", choices=("text", "json"), default="text")
    chk.set_defaults(func=_cmd_check)

    mat = sub.add_parser("matrix", help="print one of the four matrices")
    mat.add_argument("--kind", choices=sorted(_BUILDERS), required=True)
    mat.add_argument("--p", type=int, required=True)
    mat.add_argument("--order", type=int, required=True)
    mat.set_defaults(func=_cmd_matrix)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize other codes too.
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
