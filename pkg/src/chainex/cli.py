"""Command-line surface: statistics, enumeration, series expansion,
bijection tracing, and identity verification.

Exit codes: 0 all requested checks pass, 1 a verification mismatch,
2 malformed input or out-of-contract arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bij
from . import qseries as qs
from . import verify as vf
from .partition import (
    Partition,
    PartitionError,
    chain_maex,
    chain_mex,
    in_gap_class,
    is_regular,
    is_strict,
    maex_offset,
    mex_offset,
    parts_above_mex,
    partitions,
)

DEFAULT_ORDER = qs.DEFAULT_ORDER

SERIES_BUILDERS = {
    # name: (callable, needs_r, needs_j)
    "sigma-mex": (lambda r, j, order: qs.series_sigma_mex(order), False, False),
    "partitions": (lambda r, j, order: qs.series_partition_count(order), False, False),
    "chain-mex": (lambda r, j, order: qs.series_chain_mex_sum(r, order), True, False),
    "chain-mex-shifted": (lambda r, j, order: qs.series_chain_mex_shifted(r, order), True, False),
    "chain-mex-offset": (lambda r, j, order: qs.series_chain_mex_offset_sum(r, order), True, False),
    "maex-defect": (lambda r, j, order: qs.series_maex_defect(order), False, False),
    "chain-maex": (lambda r, j, order: qs.series_chain_maex_sum(r, order), True, False),
    "chain-maex-product": (lambda r, j, order: qs.series_chain_maex_product(r, order), True, False),
    "strict": (lambda r, j, order: qs.series_strict_count(r, order), True, False),
    "top-mult": (lambda r, j, order: qs.series_top_multiplicity_count(r, order), True, False),
    "bottom-mult": (lambda r, j, order: qs.series_bottom_multiplicity_count(r, order), True, False),
    "sigma-largest": (lambda r, j, order: qs.series_sum_largest(order), False, False),
    "j-parts": (lambda r, j, order: qs.series_parts_above(r, j, order), True, True),
}


class CliError(Exception):
    pass


def _parse_partition(text: str, sort: bool) -> Partition:
    return Partition.parse(text, sort=sort)


def _parse_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_stats(args) -> int:
    lam = _parse_partition(args.partition, args.sort)
    r = args.r
    record = {
        "partition": str(lam),
        "weight": lam.weight,
        "num_parts": lam.num_parts,
        "largest": lam.largest,
        "class": "P0" if in_gap_class(lam, r) else "P+",
        "mex": chain_mex(lam, r),
        "maex": chain_maex(lam, r),
        "omega": mex_offset(lam, r),
        "Omega": maex_offset(lam, r),
        "parts_above_mex": parts_above_mex(lam, r),
    }
    if args.format == "json":
        record["schema"] = 1
        _emit(json.dumps(record, indent=2), args.out)
    else:
        _emit("\n".join(f"{k}={v}" for k, v in record.items()), args.out)
    return 0


def cmd_enumerate(args) -> int:
    predicate = None
    preds = []
    if args.regular:
        preds.append(lambda p, r=args.regular: is_regular(p, r))
    if args.strict:
        preds.append(lambda p, r=args.strict: is_strict(p, r))
    if args.gap_class:
        if args.r is None:
            raise CliError("--gap-class requires --r")
        want = args.gap_class == "bounded"
        preds.append(lambda p, r=args.r, w=want: in_gap_class(p, r) == w)
    if preds:
        predicate = lambda p: all(f(p) for f in preds)
    items = [str(p) for p in partitions(args.n, predicate)]
    if args.format == "json":
        _emit(json.dumps({"schema": 1, "n": args.n, "count": len(items),
                          "partitions": items}, indent=2), args.out)
    else:
        _emit("\n".join(items + [f"count={len(items)}"]), args.out)
    return 0


def cmd_series(args) -> int:
    try:
        builder, needs_r, needs_j = SERIES_BUILDERS[args.name]
    except KeyError:
        raise CliError(f"unknown series {args.name!r}; choose from "
                       + ", ".join(sorted(SERIES_BUILDERS))) from None
    if needs_r and args.r is None:
        raise CliError(f"series {args.name!r} requires --r")
    if needs_j and args.j is None:
        raise CliError(f"series {args.name!r} requires --j")
    series = builder(args.r, args.j, args.order)
    if args.format == "json":
        _emit(json.dumps(series.to_json()), args.out)
    elif args.format == "csv":
        rows = ["n,coeff"] + [f"{n},{c}" for n, c in enumerate(series.coeffs)]
        _emit("\n".join(rows), args.out)
    else:
        _emit(str(series), args.out)
    return 0


def cmd_bijection(args) -> int:
    lam = _parse_partition(args.lam, args.sort)
    r = args.r
    name = args.name
    try:
        if name in ("gamma", "gamma-star", "delta"):
            if args.i is None:
                raise CliError(f"bijection {name!r} requires --i")
            tracer = {"gamma": bij.mex_pairing_trace,
                      "delta": bij.maex_pairing_trace}.get(name)
            if name == "gamma-star":
                pair = bij.mex_pairing_colored(lam, args.i, r)
                payload = {"input": {"lambda": str(lam), "i": args.i, "r": r},
                           "case": pair.case, "output": pair.to_json()}
            else:
                payload = tracer(lam, args.i, r)
                if not args.trace:
                    payload = {"input": payload["input"], "output": payload["output"]}
        else:
            maps = {
                "glaisher": bij.glaisher_merge,
                "glaisher-inv": bij.glaisher_split,
                "multiples-to-repeats": bij.multiples_to_repeats,
                "repeats-to-multiples": bij.repeats_to_multiples,
                "top-multiple": bij.top_multiple_to_repeats,
                "top-multiple-inv": bij.repeats_to_top_multiple,
            }
            if name not in maps:
                raise CliError(f"unknown bijection {name!r}")
            out = maps[name](lam, r)
            payload = {"input": {"lambda": str(lam), "r": r}, "output": str(out)}
    except bij.DomainError as exc:
        raise CliError(str(exc)) from None
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def cmd_verify(args) -> int:
    r_values = _parse_range(args.r) if args.r else None
    j_values = _parse_range(args.j) if args.j else None
    if args.id in vf.THEOREMS:
        report = vf.check_theorem(args.id, r_values=r_values, n_max=args.n,
                                  j_values=j_values, order=args.order)
    elif args.id in vf.BIJECTIONS:
        if not r_values:
            raise CliError("bijection verification requires --r")
        report = vf.VerificationReport(f"bijection:{args.id}")
        for r in r_values:
            sub = vf.certify_bijection(args.id, r, args.n if args.n is not None else 16)
            report.rows.extend(sub.rows)
            report.wall_time += sub.wall_time
    else:
        raise CliError(f"unknown verification id {args.id!r}; theorems: "
                       + ", ".join(vf.THEOREMS) + "; bijections: " + ", ".join(vf.BIJECTIONS))
    _emit(vf.report_to_format(report, args.format), args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chainex",
        description="Exact partition statistics, bijections, q-series, and "
                    "identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("stats", help="excludant statistics of one partition")
    p.add_argument("partition", help="partition literal, e.g. [5,3,1]")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--sort", action="store_true",
                   help="normalize a partition literal given in any order")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("enumerate", help="list all partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--regular", type=int, default=None, metavar="R",
                   help="keep only R-regular partitions")
    p.add_argument("--strict", type=int, default=None, metavar="R",
                   help="keep only R-strict partitions")
    p.add_argument("--gap-class", choices=("bounded", "exceeds"), default=None)
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("series", help="expand a generating function")
    p.add_argument("name")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bijection", help="apply a constructive map")
    p.add_argument("name")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="partition literal, e.g. [5,3,1]")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--sort", action="store_true")
    p.add_argument("--trace", action="store_true",
                   help="include the intermediate steps in the JSON output")
    common(p)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run an identity or bijection check")
    p.add_argument("id", help="e.g. thm-1.7, q-binomial, gamma")
    p.add_argument("--r", default=None, help="single value or range like 1..3")
    p.add_argument("--j", default=None, help="single value or range")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (CliError, PartitionError, qs.SeriesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
