"""Command-line surface: solve, bounds, verify, plant, table.

Exit codes: 0 success, 1 malformed input, 2 genericity failure after
retries, 3 resource cap, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bounds import total_output_bound
from .errors import (
    FormatError,
    HankelRankError,
    ResourceError,
    RetriesExhaustedError,
)
from .groebner import GBCaps
from .serialize import (
    dump_pencil,
    dump_result,
    load_pencil,
    load_result,
    rational_from_str,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_GENERICITY = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4


def _caps_from_env() -> GBCaps:
    caps = GBCaps()
    raw = os.environ.get("LRH_RESOURCE_CAP")
    if raw:
        try:
            caps.max_basis = caps.max_pairs = int(raw)
        except ValueError:
            pass
    return caps


def _write(text: str, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    from .driver import SolveOptions, low_rank_hankel

    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            pencil = load_pencil(fh.read())
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if not 0 <= args.rank <= pencil.m - 1:
        print(
            f"error: rank must be between 0 and {pencil.m - 1}", file=sys.stderr
        )
        return EXIT_BAD_INPUT
    opts = SolveOptions(
        max_retries=args.max_retries,
        verify=not args.no_verify,
        merge_union=args.merge_union,
        eps=rational_from_str(args.eps) if args.eps else Fraction(1, 2**30),
        jobs=args.jobs,
        caps=_caps_from_env(),
        check_genericity=args.check_genericity,
    )
    try:
        result = low_rank_hankel(pencil, args.rank, seed=args.seed, opts=opts)
    except RetriesExhaustedError as exc:
        print(f"error: genericity failure after retries: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except ResourceError as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    bound = total_output_bound(pencil.m, pencil.n, args.rank).total
    _write(dump_result(result, bound, args.seed), args.output)
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        report = total_output_bound(args.m, args.n, args.rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.json:
        obj = {
            "m": report.m,
            "n": report.n,
            "r": report.r,
            "baseDegree": report.base_degree,
            "perLevel": [
                {"k": k, "p": p, "delta": v} for (k, p), v in sorted(report.per_level.items())
            ],
            "total": report.total,
        }
        print(json.dumps(obj, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"bounds for m={report.m} n={report.n} r={report.r}")
    ks = sorted({k for (k, _) in report.per_level})
    if ks:
        header = "  k\\p " + "".join(f"{p:>10}" for p in range(report.r + 1))
        print(header)
        for k in ks:
            row = "".join(f"{report.per_level[(k, p)]:>10}" for p in range(report.r + 1))
            print(f"  {k:>3} {row}")
    else:
        print("  (no recursion levels: n below the base dimension)")
    print(f"  base degree: {report.base_degree}")
    print(f"  total bound: {report.total}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import verify_membership

    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            pencil = load_pencil(fh.read())
        with open(args.result, "r", encoding="utf-8") as fh:
            result = load_result(fh.read())
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    failures = []
    for idx, param in enumerate(result["params_parsed"]):
        if not verify_membership(pencil, args.rank, param):
            failures.append(idx)
    if failures:
        print(f"verification FAILED for parametrizations {failures}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"verified {len(result['params_parsed'])} parametrization(s): all minors vanish")
    return EXIT_OK


def cmd_plant(args) -> int:
    from .hankel import rank_at
    from .verify import PlantSpec, plant_rank_deficient

    try:
        point = [rational_from_str(v) for v in args.point.split(",")] if args.point else []
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if len(point) != args.n:
        print(f"error: point must have {args.n} coordinates", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        pencil = plant_rank_deficient(PlantSpec(args.m, args.n, args.rank, point, args.seed))
    except (ValueError, HankelRankError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    _write(dump_pencil(pencil), args.output)
    achieved = rank_at(pencil, point)
    print(f"planted point: ({args.point})  rank at point: {achieved} <= {args.rank}", file=sys.stderr)
    return EXIT_OK


def cmd_table(args) -> int:
    from .driver import SolveOptions
    from .verify import load_table_rows, reproduce_degrees

    try:
        rows = load_table_rows(args.rows)
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: cannot load table rows: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    opts = SolveOptions(caps=_caps_from_env())
    reports = reproduce_degrees(
        rows, seed_count=args.seeds, max_m=args.max_m, opts=opts, jobs=args.jobs
    )
    print(f"{'(m,r,n)':>10} {'expected':>9} {'observed':>20} {'maxdeg':>16} {'bound':>7}  status")
    for rep in reports:
        row = rep.row
        tag = f"({row.m},{row.r},{row.n})"
        if rep.skipped:
            print(f"{tag:>10} {str(row.total_deg):>9} {'-':>20} {'-':>16} {rep.bound:>7}  bounds-only")
            continue
        obs = ",".join(str(t) for t in rep.observed_total) or "-"
        mx = ",".join(str(t) for t in rep.observed_max) or "-"
        status = "ok" if rep.total_matches() else "MISMATCH"
        if rep.errors:
            status = "resource-capped"
        print(f"{tag:>10} {str(row.total_deg):>9} {obs:>20} {mx:>16} {rep.bound:>7}  {status}")
        for note in rep.redraw_notes:
            print(f"{'':>10} note: {note}")
        if args.timings and rep.timings:
            stamps = ", ".join(f"{t:.1f}s" for t in rep.timings)
            print(f"{'':>10} timings (informational): {stamps}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelrank",
        description="Exact sample points on low-rank loci of linear Hankel pencils",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a pencil file for rank <= r sample points")
    p.add_argument("--input", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", default=None, help="box width target, rational string")
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--check-genericity", action="store_true")
    p.add_argument("--merge-union", action="store_true")
    p.add_argument("--max-retries", type=int, default=3)
    p.add_argument("--output", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="print the output-degree budget")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="re-check membership certificates of a result")
    p.add_argument("--input", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--result", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plant", help="write a pencil with a planted low-rank point")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--point", required=True, help="comma-separated rationals")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_plant)

    p = sub.add_parser("table", help="reproduce benchmark degrees at desk scale")
    p.add_argument("--rows", default=None, help="path to a rows file (default: packaged)")
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RetriesExhaustedError as exc:
        print(f"error: genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except ResourceError as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
