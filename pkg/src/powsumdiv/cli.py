"""Command-line surface: profiles, densities, counts, sweeps and the
verification suites.  Exit codes: 0 success, 1 verification failure,
2 usage or precondition error.

Output is deterministic for a given command line: no timestamps, no
machine-dependent values.  Exact rationals are rendered as p/q in JSON
and as decimals (10 significant digits) in CSV.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .census import (
    CHARACTER_X_LIMIT,
    DEFAULT_SEGMENT_SIZE,
    character_count,
    count_exact,
    formula_count,
    heuristic_counts,
    ramanujan_count,
    sweep,
)
from .density import density_report
from .profile import BaseProfile, DegenerateRatioError, ZeroInputError, decompose
from .verify import SUITES, run_suite

CSV_HEADER = "x,pi,li,n_exact,n_generic,h1,h2,k1,k2,tail,delta,delta1"

_RATIONAL_COLUMNS = ("h1", "h2", "k1", "k2", "tail", "delta", "delta1")


def _dec(value) -> str:
    """Decimal rendering with 10 significant digits."""
    return f"{float(value):.10g}"


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _profile_or_exit(a: int, b: int) -> BaseProfile:
    try:
        return decompose(a, b)
    except ZeroInputError:
        print("error: zero input (a and b must be nonzero)", file=sys.stderr)
        raise SystemExit(2)
    except DegenerateRatioError:
        print("error: ratio is +-1 (|a| must differ from |b|)", file=sys.stderr)
        raise SystemExit(2)


def cmd_profile(args) -> int:
    profile = _profile_or_exit(args.a, args.b)
    print(json.dumps(profile.to_json_dict(), indent=2))
    return 0


def cmd_density(args) -> int:
    profile = _profile_or_exit(args.a, args.b)
    report = density_report(profile)
    if args.format == "json":
        print(json.dumps({
            "delta": _frac(report.delta),
            "delta_decimal": float(report.delta),
            "delta1": _frac(report.delta1),
            "delta1_decimal": float(report.delta1),
            "delta2": _frac(report.delta2),
            "delta2_decimal": float(report.delta2),
            "anomaly": report.anomaly,
        }, indent=2))
    else:
        print(f"delta  = {report.delta} ({_dec(report.delta)})")
        print(f"delta1 = {report.delta1} ({_dec(report.delta1)})")
        print(f"delta2 = {report.delta2} ({_dec(report.delta2)})")
        if report.anomaly:
            print("sqrt2 anomaly: naive heuristic is not asymptotically exact"
                  f" (delta1 != delta)")
    return 0


def cmd_count(args) -> int:
    profile = _profile_or_exit(args.a, args.b)
    if args.x < 2:
        print("error: x must be >= 2", file=sys.stderr)
        return 2
    method = args.method
    if method == "character" and args.x > CHARACTER_X_LIMIT:
        print(f"error: method 'character' requires x <= {CHARACTER_X_LIMIT}",
              file=sys.stderr)
        return 2
    if method == "exact":
        value = count_exact(profile, args.x)
    elif method == "h1":
        value = heuristic_counts(profile, args.x).h1
    elif method == "h2":
        value = heuristic_counts(profile, args.x).h2
    elif method == "formula":
        value = formula_count(profile, args.x)
    elif method == "ramanujan":
        value = ramanujan_count(profile, args.x, args.truncation)
    else:
        value = character_count(profile, args.x)
    if args.format == "json":
        doc = {"method": method, "a": args.a, "b": args.b, "x": args.x}
        if isinstance(value, int):
            doc["value"] = value
        else:
            doc["value"] = _frac(value)
            doc["decimal"] = float(value)
        print(json.dumps(doc))
    elif isinstance(value, int):
        print(value)
    else:
        print(f"{value} ({_dec(value)})")
    return 0


def default_checkpoints(count: int, x_max: int) -> list[int]:
    """count geometrically spaced checkpoints ending at x_max.

    Spacing runs from 10 (or x_max if smaller) to x_max; rounded values
    are deduplicated, so fewer than count points may come back.
    """
    if count < 1:
        raise ValueError("checkpoint count must be >= 1")
    lo = min(10, x_max)
    pts = set()
    for i in range(count):
        t = i / (count - 1) if count > 1 else 1.0
        pts.add(round(lo * (x_max / lo) ** t))
    pts.add(x_max)
    return sorted(p for p in pts if p >= 2)


def cmd_sweep(args) -> int:
    profile = _profile_or_exit(args.a, args.b)
    if args.checkpoint_list:
        try:
            checkpoints = [int(tok) for tok in args.checkpoint_list.split(",")]
        except ValueError:
            print("error: --checkpoint-list must be comma-separated integers",
                  file=sys.stderr)
            return 2
    else:
        checkpoints = default_checkpoints(args.checkpoints, args.x_max)
    try:
        series = sweep(profile, args.x_max, checkpoints,
                       threads=args.threads, segment_size=args.segment_size)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render_sweep(series, args.format))
    return 0


def render_sweep(series, fmt: str) -> str:
    rows = series.rows()
    if fmt == "json":
        docs = []
        for row in rows:
            doc = {"x": row["x"], "pi": row["pi"], "li": row["li"],
                   "n_exact": row["n_exact"], "n_generic": row["n_generic"]}
            for key in _RATIONAL_COLUMNS:
                doc[key] = _frac(row[key])
            docs.append(doc)
        return json.dumps(docs, indent=2) + "\n"
    lines = [CSV_HEADER]
    for row in rows:
        cells = [str(row["x"]), str(row["pi"]), _dec(row["li"]),
                 str(row["n_exact"]), str(row["n_generic"])]
        cells += [_dec(row[key]) for key in _RATIONAL_COLUMNS]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failed = False
    for name, (checked, failures) in results.items():
        if failures:
            failed = True
            print(f"FAIL {name}: {len(failures)} violation(s) in {checked} checks")
            for line in failures[:10]:
                print(f"  counterexample: {line}")
        else:
            print(f"ok {name}: {checked} checks")
    return 1 if failed else 0


def _int_env_threads() -> int:
    raw = os.environ.get("POWSUMDIV_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powsumdiv",
        description="Primes dividing a^k + b^k: exact counts, heuristics, densities.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("profile", help="decompose (a, b) and print the profile as JSON")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("density", help="exact limiting densities of (a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("count", help="count primes <= x by the chosen method")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("x", type=int)
    p.add_argument("--method", default="exact",
                   choices=("exact", "h1", "h2", "formula", "ramanujan", "character"))
    p.add_argument("--truncation", default="full", choices=("full", "e", "e+1"),
                   help="inner-sum cutoff for --method ramanujan")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sweep", help="checkpointed sweep, CSV or JSON")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("x_max", type=int)
    p.add_argument("--checkpoints", type=int, default=20,
                   help="number of geometrically spaced checkpoints")
    p.add_argument("--checkpoint-list", default="",
                   help="explicit comma-separated checkpoints (overrides --checkpoints)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", type=int, default=_int_env_threads(),
                   help="worker processes (default: POWSUMDIV_THREADS or 1)")
    p.add_argument("--segment-size", type=int, default=DEFAULT_SEGMENT_SIZE)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
