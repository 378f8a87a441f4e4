"""``betaineq`` command line.

Exit codes: 0 success, 1 I/O failure, 2 usage or configuration error,
3 an Asserted claim failed under ``--strict``, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import lemma, regionmap, verifier
from .catalog import Status, Target, claims_table, compare_bounds, eval_bound, lookup
from .errors import ConfigurationError, DomainError, NumericalError, UsageError
from .oracle import RatioParams, SymmetricParams, ValueParams

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_ASSERTED_FAIL = 3
EXIT_NUMERICAL = 4


def _g(v: float) -> str:
    return f"{v:#.6g}"


def _log_and_value(target: Target, v: float) -> str:
    if target.log_space:
        lin = math.exp(v) if v != float("-inf") else 0.0
        return f"log {_g(v)}  value {_g(lin)}"
    return _g(v)


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _float_list(text: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if not vals or any(not v > 0 for v in vals):
        raise argparse.ArgumentTypeError("need one or more positive values")
    return vals


def _params_for(target: Target, a, b, y):
    need = {"a": a}
    if target in (Target.RATIO, Target.DIFFERENCE, Target.SYMMETRIC_RATIO):
        need["b"] = b
    if target is not Target.SYMMETRIC_RATIO:
        need["y"] = y
    missing = [k for k, v in need.items() if v is None]
    if missing:
        raise UsageError(f"{target.value} bounds need " + ", ".join(f"-{k}" for k in missing))
    if target is Target.SYMMETRIC_RATIO:
        return SymmetricParams(a, b)
    if target in (Target.VALUE, Target.LOG_DERIVATIVE):
        return ValueParams(a, y)
    return RatioParams(a, b, y)


def _params_text(p) -> str:
    return " ".join(f"{k}={v:g}" for k, v in verifier.params_dict(p).items())


# ---------------------------------------------------------------------------
# subcommands


def cmd_claims(args) -> int:
    rows = claims_table()
    widths = {k: max(len(k), *(len(r[k]) for r in rows)) for k in rows[0]}
    cols = ("id", "target", "side", "status", "domain")
    print("  ".join(c.ljust(widths[c]) for c in cols).rstrip())
    for r in rows:
        print("  ".join(r[c].ljust(widths[c]) for c in cols).rstrip())
    return EXIT_OK


def cmd_eval(args) -> int:
    claim = lookup(args.bound)
    p = _params_for(claim.target, args.a, args.b, args.y)
    rec = verifier.check_claim(claim, p, args.tol, allow_outside_domain=args.allow_outside_domain)
    inside = claim.domain.contains(p)
    print(f"claim   {claim.id.value}  ({claim.target.value}, {claim.side.value}, {claim.status.value})")
    print(f"params  {_params_text(p)}" + ("" if inside else "  [outside stated domain]"))
    print(f"bound   {_log_and_value(claim.target, rec.bound)}")
    print(f"oracle  {_log_and_value(claim.target, rec.oracle)}  (err {rec.oracle_err:.1e})")
    print(f"margin  {_g(rec.margin)}  {rec.verdict.value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    claims = verifier.select_claims(args.claims)
    report = verifier.run_suite(claims, args.samples, args.seed, args.tol, wide=args.wide,
                                keep_records=args.records is not None)
    print(f"{'id':<11} {'status':<9} {'n':>7} {'holds':>7} {'marg':>5} {'fails':>7}  worst margin")
    for agg in report.aggregates:
        worst = "n/a" if agg.worst_margin is None else _g(agg.worst_margin)
        print(f"{agg.id:<11} {agg.info['status']:<9} {agg.n_samples:>7} {agg.n_holds:>7} "
              f"{agg.n_marginal:>5} {agg.n_fails:>7}  {worst}")
    asserted = report.failures(Status.ASSERTED)
    disputed = report.failures(Status.DISPUTED)
    print(f"asserted failures: {', '.join(asserted) or 'none'}")
    print(f"disputed failures (printed direction contradicted): {', '.join(disputed) or 'none'}")
    if report.soundness:
        s = report.soundness
        print(f"quadrature re-check: {s['agreed']}/{s['checked']} verdicts reproduced")
    if args.out:
        report.write_json(args.out)
    if args.records:
        report.write_records_csv(args.records)
    if args.strict and asserted:
        return EXIT_ASSERTED_FAIL
    return EXIT_OK


def cmd_compare(args) -> int:
    first, second = lookup(args.first), lookup(args.second)
    p = _params_for(first.target, args.a, args.b, args.y)
    sign = compare_bounds(first.id, second.id, p, allow_outside_domain=args.allow_outside_domain)
    v1 = eval_bound(first.id, p, args.allow_outside_domain)
    v2 = eval_bound(second.id, p, args.allow_outside_domain)
    print(f"params  {_params_text(p)}")
    print(f"{first.id.value:<11} {_log_and_value(first.target, v1)}")
    print(f"{second.id.value:<11} {_log_and_value(second.target, v2)}")
    rel = {1: ">", 0: "=", -1: "<"}[sign]
    print(f"sign    {sign:+d}  ({first.id.value} {rel} {second.id.value})")
    return EXIT_OK


def cmd_compare_suite(args) -> int:
    report = verifier.dominance_suite(args.samples, args.seed, wide=args.wide)
    print(f"{'relation':<22} {'n':>6} {'agree':>6} {'tie':>5} {'reversed':>8}  smallest gap")
    for agg in report.aggregates:
        print(f"{agg.id:<22} {agg.n_samples:>6} {agg.n_holds:>6} {agg.n_marginal:>5} "
              f"{agg.n_fails:>8}  {_g(agg.worst_margin)}")
    if args.out:
        report.write_json(args.out)
    return EXIT_OK


def cmd_lemma_check(args) -> int:
    p = lemma.LemmaParams(args.x, args.y, args.k, args.h, args.l)
    lhs, rhs = lemma.lemma_sides(p)
    print(f"lhs       {lhs!r}")
    print(f"rhs       {rhs!r}")
    print(f"residual  {lhs - rhs!r}")
    return EXIT_OK


def cmd_lemma_suite(args) -> int:
    res = lemma.lemma_suite(args.samples, args.seed)
    print(f"samples           {res['n_samples']}")
    print(f"max |residual|    {res['max_abs_residual']:.3e}")
    print(f"at                {json.dumps(res['params_at_max'])}")
    return EXIT_OK


def cmd_map(args) -> int:
    if args.paper_figure:
        if args.y is not None or args.y_list is not None:
            raise UsageError("--paper-figure fixes the y values; drop --y/--y-list")
        axis = regionmap.Axis.paper()
        ys = list(regionmap.PAPER_Y_VALUES)
    else:
        if args.y is None and args.y_list is None:
            raise UsageError("give --y, --y-list or --paper-figure")
        axis = regionmap.Axis(args.min, args.max, args.points)
        ys = [args.y] if args.y is not None else args.y_list
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    print(f"{'y':<10} {'-1':>9} {'+1':>9} {'tie':>9}  file")
    for y in ys:
        grid = regionmap.compute_grid(axis, y)
        path = out / f"region_y{regionmap.format_number(y)}.{args.format}"
        if args.format == "pgm":
            regionmap.write_pgm(grid, path)
        else:
            regionmap.write_csv(grid, path)
        print(f"{y:<10g} {grid.fraction(-1):>9.4%} {grid.fraction(1):>9.4%} "
              f"{grid.fraction(0):>9.4%}  {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_run_flags(p, samples_default):
    p.add_argument("--samples", type=_positive_int, default=samples_default,
                   help=f"samples per claim (default {samples_default})")
    p.add_argument("--seed", type=int, default=1, help="sampling seed (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="betaineq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("claims", help="list the bound catalog")
    p.set_defaults(func=cmd_claims)

    p = sub.add_parser("eval", help="evaluate one bound against the oracle")
    p.add_argument("--bound", required=True, help="claim id, e.g. M6_U")
    p.add_argument("-a", type=float, help="a (or x for single-argument bounds)")
    p.add_argument("-b", type=float, help="b (ratio, difference and symmetric bounds)")
    p.add_argument("-y", type=float, help="y")
    p.add_argument("--tol", type=_positive_float, default=1e-9, help="verdict tolerance (default 1e-9)")
    p.add_argument("--allow-outside-domain", action="store_true",
                   help="evaluate even if the point lies outside the claim's stated domain")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="sample claim domains and check every bound")
    p.add_argument("--claims", default="all", help="all, asserted, disputed or a comma list of ids")
    _add_run_flags(p, 10000)
    p.add_argument("--tol", type=_positive_float, default=1e-9, help="verdict tolerance (default 1e-9)")
    p.add_argument("--wide", action="store_true", help="sample up to 1e3 instead of 50")
    p.add_argument("--strict", action="store_true", help="exit 3 if an Asserted claim fails")
    p.add_argument("--records", metavar="CSV", help="write one row per sample to this file")
    p.add_argument("--out", metavar="JSON", help="write the suite report to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="sign of bound(first) - bound(second) at one point")
    p.add_argument("--first", required=True, help="claim id")
    p.add_argument("--second", required=True, help="claim id with the same target")
    p.add_argument("-a", type=float, help="a (or x)")
    p.add_argument("-b", type=float, help="b")
    p.add_argument("-y", type=float, help="y")
    p.add_argument("--allow-outside-domain", action="store_true",
                   help="compare even outside the claims' stated domains")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("compare-suite", help="check every comparison remark on sampled points")
    _add_run_flags(p, 1000)
    p.add_argument("--wide", action="store_true", help="sample up to 1e3 instead of 50")
    p.add_argument("--out", metavar="JSON", help="write the report to this file")
    p.set_defaults(func=cmd_compare_suite)

    # -h is a parameter here, so help is only reachable as --help
    p = sub.add_parser("lemma-check", add_help=False, help="residual of the generating identity")
    p.add_argument("--help", action="help", help="show this help message and exit")
    p.add_argument("-x", type=float, required=True, help="x > 0")
    p.add_argument("-y", type=float, required=True, help="y > 0")
    p.add_argument("-k", type=int, required=True, help="positive integer k")
    p.add_argument("-h", type=float, required=True, help="shift h with y - h > 0")
    p.add_argument("-l", type=float, required=True, help="shift l with x + k - l > 0")
    p.set_defaults(func=cmd_lemma_check)

    p = sub.add_parser("lemma-suite", help="residual statistics over random admissible tuples")
    _add_run_flags(p, 1000)
    p.set_defaults(func=cmd_lemma_suite)

    p = sub.add_parser("map", help="sign map of M6_U against FROM317_U")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--y", type=_positive_float, help="single y value")
    g.add_argument("--y-list", type=_float_list, help="comma-separated y values")
    p.add_argument("--min", type=float, default=0.1, help="axis minimum (default 0.1)")
    p.add_argument("--max", type=float, default=10.0, help="axis maximum (default 10)")
    p.add_argument("--points", type=int, default=201, help="points per axis (default 201)")
    p.add_argument("--format", choices=("pgm", "csv"), default="pgm", help="output format")
    p.add_argument("--out", required=True, metavar="DIR", help="output directory")
    p.add_argument("--paper-figure", action="store_true",
                   help="axis 0..500 with 2001 points (first clamped to 1e-16) and the 14 published y values")
    p.set_defaults(func=cmd_map)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ConfigurationError, DomainError) as exc:
        print(f"betaineq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"betaineq: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"betaineq: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
