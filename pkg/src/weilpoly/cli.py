"""Command-line front end: construct, verify, search, report.

Exit codes: 0 success / verification positive, 1 malformed arguments or
input, 2 invalid parameter tuple, 3 verification negative (the input is not
a q-polynomial).  Polynomials are read and written as comma-separated
decimal coefficients, low degree first ("25,5,1,1,1" is t^4+t^3+t^2+5t+25).

The environment variable WEILPOLY_PRECISION_BITS sets the default numeric
oracle precision.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .engine import (
    CSV_FIELDS,
    ClassificationReport,
    ClassifyOptions,
    ParamTuple,
    SearchRange,
    classify,
    search,
    search_summary,
    validate_tuple,
)
from .intpoly import IntPoly
from .numtheory import is_prime, prime_power_decompose
from .errors import NotPrimePower

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_TUPLE = 2
EXIT_NEGATIVE = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_precision() -> int | None:
    raw = os.environ.get("WEILPOLY_PRECISION_BITS")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def _print_report(rep: ClassificationReport, verbose: bool = True) -> None:
    print(f"poly: {rep.poly.to_string()}")
    print(f"g={rep.g} q={rep.q}")
    d = rep.to_json_dict(include_timings=False)
    for key in (
        "is_q_polynomial",
        "method",
        "ll_passed",
        "ordinary",
        "simple",
        "simple_r",
        "absolutely_simple",
        "witness_d",
        "power_test_bound",
        "max_modulus_deviation",
    ):
        if d.get(key) is not None:
            print(f"{key}: {d[key]}")
    if rep.modulus_witness:
        print(f"modulus_witness: {json.dumps(rep.modulus_witness)}")


def _add_classify_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--d-bound", type=int, default=None,
                     help="scan limit for the root-power subfield test")
    sub.add_argument("--numeric", action="store_true",
                     help="also run the numeric root oracle")
    sub.add_argument("--precision-bits", type=int, default=_default_precision(),
                     help="numeric oracle working precision")


def _options_from(args) -> ClassifyOptions:
    return ClassifyOptions(
        d_bound=args.d_bound,
        with_numeric=args.numeric,
        precision_bits=args.precision_bits,
    )


def cmd_construct(args) -> int:
    for name in ("rho", "r", "p"):
        value = getattr(args, name)
        if not is_prime(value):
            print(f"error: --{name} must be prime (got {value})", file=sys.stderr)
            return EXIT_USAGE
    if args.rho < 5:
        print(f"error: --rho must be >= 5 (got {args.rho})", file=sys.stderr)
        return EXIT_USAGE
    if args.b < 1 or args.n < 1 or args.m < 0:
        print("error: need --b >= 1, --n >= 1, --m >= 0", file=sys.stderr)
        return EXIT_USAGE
    t = ParamTuple(rho=args.rho, b=args.b, r=args.r, p=args.p, n=args.n, m=args.m)
    checks = validate_tuple(t)
    failed = [c for c in checks if not c.passed]
    if failed:
        print("invalid tuple; failed preconditions:")
        for c in failed:
            print(f"  - {c.name} ({c.detail})")
        return EXIT_INVALID_TUPLE
    rep = classify(t, _options_from(args))
    _print_report(rep)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        poly = IntPoly.from_string(args.poly)
    except ValueError as exc:
        print(f"error: bad polynomial: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if poly.degree < 1:
        print("error: polynomial must be nonconstant", file=sys.stderr)
        return EXIT_USAGE
    try:
        prime_power_decompose(args.q)
    except NotPrimePower:
        print(f"error: q={args.q} is not a prime power", file=sys.stderr)
        return EXIT_USAGE
    rep = classify((poly, args.q), _options_from(args))
    _print_report(rep)
    return EXIT_OK if rep.is_q_polynomial else EXIT_NEGATIVE


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def cmd_search(args) -> int:
    try:
        rhos = _parse_int_list(args.rho)
        bs = _parse_int_list(args.b)
        rs = None if args.r == "least" else _parse_int_list(args.r)
    except ValueError as exc:
        print(f"error: bad range: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.m_policy not in ("corners", "all"):
        print("error: --m-policy must be corners or all", file=sys.stderr)
        return EXIT_USAGE
    rng = SearchRange(
        rhos=rhos, bs=bs, rs=rs, q_min=args.q_min, q_max=args.q_max,
        m_policy=args.m_policy,
    )
    options = _options_from(args)
    include_timings = not args.no_timings
    reports = []
    try:
        out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    except OSError as exc:
        print(f"error: cannot open output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.format == "csv":
            writer = csv.writer(out)
            writer.writerow(CSV_FIELDS)
            for rep in search(rng, options, workers=args.workers):
                writer.writerow(rep.to_csv_row())
                reports.append(rep)
        else:
            for rep in search(rng, options, workers=args.workers):
                out.write(rep.to_json_line(include_timings) + "\n")
                reports.append(rep)
    finally:
        if args.out:
            out.close()
    summary = search_summary(reports)
    print(" ".join(f"{k}={v}" for k, v in summary.items()))
    return EXIT_OK


def _load_jsonl(path: str) -> list[dict]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append(json.loads(line))
    return rows


def cmd_report(args) -> int:
    try:
        rows = _load_jsonl(args.infile)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    groups: dict[tuple, dict] = {}
    for row in rows:
        t = row.get("tuple") or {}
        key = (t.get("rho", "-"), t.get("b", "-"))
        grp = groups.setdefault(
            key,
            {"count": 0, "q_poly": 0, "ordinary": 0, "simple": 0,
             "abs": {}, "max_dev": None},
        )
        grp["count"] += 1
        grp["q_poly"] += bool(row.get("is_q_polynomial"))
        grp["ordinary"] += row.get("ordinary") is True
        grp["simple"] += row.get("simple") is True
        verdict = row.get("absolutely_simple") or "not_evaluated"
        if verdict == "certified_no" and row.get("witness_d") is not None:
            verdict = f"certified_no(d={row['witness_d']})"
        grp["abs"][verdict] = grp["abs"].get(verdict, 0) + 1
        dev = row.get("max_modulus_deviation")
        if dev is not None:
            grp["max_dev"] = dev if grp["max_dev"] is None else max(grp["max_dev"], dev)
    header = f"{'rho':>5} {'b':>3} {'count':>6} {'q-poly':>7} {'ordinary':>9} {'simple':>7} {'max_dev':>10}  absolutely_simple"
    print(header)
    print("-" * len(header))
    for key in sorted(groups, key=lambda k: (str(k[0]), str(k[1]))):
        grp = groups[key]
        abs_desc = ", ".join(f"{k}:{v}" for k, v in sorted(grp["abs"].items()))
        dev = "-" if grp["max_dev"] is None else f"{grp['max_dev']:.2e}"
        print(
            f"{key[0]:>5} {key[1]:>3} {grp['count']:>6} {grp['q_poly']:>7} "
            f"{grp['ordinary']:>9} {grp['simple']:>7} {dev:>10}  {abs_desc}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weilpoly", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="command", required=True)

    c = subs.add_parser("construct", help="build and classify one parameter tuple")
    c.add_argument("--rho", type=int, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    _add_classify_flags(c)
    c.set_defaults(func=cmd_construct)

    v = subs.add_parser("verify", help="classify an arbitrary polynomial")
    v.add_argument("--poly", required=True, help="comma-separated coefficients, low first")
    v.add_argument("--q", type=int, required=True)
    _add_classify_flags(v)
    v.set_defaults(func=cmd_verify)

    s = subs.add_parser("search", help="classify every valid tuple in a range")
    s.add_argument("--rho", default="5,7", help="comma-separated primes")
    s.add_argument("--b", default="1", help="comma-separated values")
    s.add_argument("--r", default="least",
                   help="'least' (least prime primitive root mod rho^2) or comma-separated primes")
    s.add_argument("--q-min", type=int, default=4)
    s.add_argument("--q-max", type=int, default=64)
    s.add_argument("--m-policy", default="corners", help="corners ({0,1,m_max}) or all")
    s.add_argument("--out", default=None, help="output path (default stdout)")
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    s.add_argument("--no-timings", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    _add_classify_flags(s)
    s.set_defaults(func=cmd_search)

    r = subs.add_parser("report", help="summarize a JSONL result file")
    r.add_argument("--in", dest="infile", required=True)
    r.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
