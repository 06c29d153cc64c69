"""Command-line front end: compute single exact values, dump Stirling
triangles, run identity-verification suites, and benchmark the formulas.

Exit codes: 0 success, 1 identity or checksum failure, 2 usage/domain
error.  All computed numbers are printed exactly, in ``num/den`` form.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import CSV_HEADER, CSV_HEADER_DRY, ChecksumMismatch, run_bench
from .bernoulli import bernoulli, poly_bernoulli
from .exact import DomainError, format_rational, parse_rational
from .harmonic import harmonic_classical, harmonic_direct, harmonic_theorem1
from .powersum import FormulaId, evaluate, polylog_neg_eval
from .stirling import StirlingKind, StirlingTable, stirling1u, stirling2
from .verify import SUITE_NAMES, run_suite

__all__ = ["main"]

_QUANTITIES = (
    "powersum",
    "harmonic",
    "bernoulli",
    "polybernoulli",
    "stirling1",
    "stirling2",
    "polylog",
)
_HARMONIC_METHODS = ("direct", "theorem1", "eq2")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powsum",
        description="Exact power sums, harmonic numbers, Bernoulli and Stirling numbers.",
        epilog="POWSUM_THREADS caps verify-grid parallelism; unset means sequential.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print one exact value")
    compute.add_argument("quantity", choices=_QUANTITIES)
    compute.add_argument("-n", type=int, help="main index (upper summation limit)")
    compute.add_argument("-p", type=int, help="exponent / upper index")
    compute.add_argument("-k", type=int, help="lower index (polybernoulli, stirling)")
    compute.add_argument(
        "-t", help="evaluation point as num/den; write -t=-1/2 for negative points"
    )
    compute.add_argument(
        "--formula",
        help="powersum strategy (direct, faulhaber, gould_a, gould_b, "
        "corollary_stirling, theorem2_stirling) or harmonic method "
        "(direct, theorem1, eq2)",
    )
    compute.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    compute.set_defaults(handler=_cmd_compute)

    table = sub.add_parser("table", help="dump a Stirling triangle as CSV")
    table.add_argument("kind", choices=("stirling1", "stirling2"))
    table.add_argument("--nmax", type=int, default=10)
    table.set_defaults(handler=_cmd_table)

    verify = sub.add_parser("verify", help="run an exact identity suite")
    verify.add_argument("suite", choices=SUITE_NAMES)
    verify.add_argument("--nmax", type=int, help="override the suite's n (or k) bound")
    verify.add_argument("--pmax", type=int, help="override the suite's |p| bound")
    verify.add_argument("--order", type=int, help="override series truncation order")
    verify.set_defaults(handler=_cmd_verify)

    bench = sub.add_parser("bench", help="time the evaluation strategies")
    bench.add_argument(
        "--formulas",
        default=",".join(f.value for f in FormulaId),
        help="comma-separated formula names (default: all)",
    )
    bench.add_argument("-n", default="1000", help="comma-separated n values")
    bench.add_argument("-p", default="10", help="comma-separated p values")
    bench.add_argument("--reps", type=int, default=5, help="0 means checksums only")
    bench.add_argument("--warmup", type=int, default=1)
    bench.set_defaults(handler=_cmd_bench)

    return parser


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(payload: dict, fmt: str) -> int:
    if fmt == "plain":
        print(payload["value"])
    elif fmt == "json":
        print(json.dumps(payload))
    else:
        print(",".join(payload))
        print(",".join(str(v) for v in payload.values()))
    return 0


def _cmd_compute(args) -> int:
    q = args.quantity
    if q == "powersum":
        if args.n is None or args.p is None:
            return _usage("compute powersum needs -n and -p")
        try:
            formula = FormulaId(args.formula or "direct")
        except ValueError:
            return _usage(f"unknown formula {args.formula!r}")
        value = evaluate(formula, args.n, args.p)
        payload = {
            "n": args.n,
            "p": args.p,
            "formula": formula.value,
            "value": format_rational(value),
        }
    elif q == "harmonic":
        if args.n is None or args.p is None:
            return _usage("compute harmonic needs -n and -p")
        method = args.formula or "direct"
        if method not in _HARMONIC_METHODS:
            return _usage(f"harmonic method must be one of {', '.join(_HARMONIC_METHODS)}")
        if method == "direct":
            value = harmonic_direct(args.n, args.p)
        elif method == "theorem1":
            value = harmonic_theorem1(args.n - 1, args.p) if args.n else 0
        else:
            if args.p != 1:
                raise DomainError("method eq2 computes the p = 1 harmonic numbers only")
            value = harmonic_classical(args.n - 1) if args.n else 0
        payload = {
            "n": args.n,
            "p": args.p,
            "value": format_rational(value),
            "method": method,
        }
    elif q == "bernoulli":
        if args.n is None:
            return _usage("compute bernoulli needs -n")
        payload = {"n": args.n, "value": format_rational(bernoulli(args.n))}
    elif q == "polybernoulli":
        if args.k is None or args.p is None:
            return _usage("compute polybernoulli needs -k and -p")
        payload = {
            "k": args.k,
            "p": args.p,
            "value": format_rational(poly_bernoulli(args.k, args.p)),
        }
    elif q in ("stirling1", "stirling2"):
        if args.n is None or args.k is None:
            return _usage(f"compute {q} needs -n and -k")
        fn = stirling1u if q == "stirling1" else stirling2
        payload = {"n": args.n, "k": args.k, "value": str(fn(args.n, args.k))}
    else:  # polylog
        if args.p is None or args.t is None:
            return _usage("compute polylog needs -p and -t")
        point = parse_rational(args.t)
        value = polylog_neg_eval(args.p, point)
        payload = {"p": args.p, "t": format_rational(point), "value": format_rational(value)}
    return _emit(payload, args.format)


def _cmd_table(args) -> int:
    kind = StirlingKind.FIRST_UNSIGNED if args.kind == "stirling1" else StirlingKind.SECOND
    if args.nmax < 0:
        return _usage("table needs --nmax >= 0")
    triangle = StirlingTable(kind)
    for n in range(args.nmax + 1):
        print(",".join(str(entry) for entry in triangle.row(n)))
    return 0


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, nmax=args.nmax, pmax=args.pmax, order=args.order)
    for report in reports:
        print(json.dumps(report.to_dict()))
    return 0 if all(report.passed for report in reports) else 1


def _cmd_bench(args) -> int:
    names = [name.strip() for name in args.formulas.split(",") if name.strip()]
    try:
        formulas = [FormulaId(name) for name in names]
    except ValueError:
        valid = ", ".join(f.value for f in FormulaId)
        return _usage(f"unknown formula in {args.formulas!r}; valid names: {valid}")
    if not formulas:
        return _usage("bench needs at least one formula")
    try:
        n_values = [int(chunk) for chunk in args.n.split(",")]
        p_values = [int(chunk) for chunk in args.p.split(",")]
    except ValueError:
        return _usage("bench -n and -p take comma-separated integers")
    records = run_bench(formulas, n_values, p_values, reps=args.reps, warmup=args.warmup)
    if args.reps == 0:
        print(CSV_HEADER_DRY)
        for record in records:
            print(f"{record.formula.value},{record.n},{record.p},{record.checksum}")
    else:
        print(CSV_HEADER)
        for record in records:
            print(record.csv_row())
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own usage message
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ChecksumMismatch as exc:
        print(f"checksum mismatch: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
