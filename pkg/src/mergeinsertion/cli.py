"""Command-line interface: sorting, experiments, exact analysis, and tables.

Every table-producing subcommand writes tab-separated UTF-8 with a
header row, suitable for any plotting tool; reproducibility metadata
(generator identity and seed) goes to stderr so the data stream stays
clean.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import exact_analysis, harness, probability
from .harness import ExperimentConfig, Table, emit_tsv
from .sorter import Schedule, combined_sort, merge_insertion, one_two_insertion
from .strategies import Strategy


def _parse_ns(args) -> tuple[int, ...]:
    ns: list[int] = []
    if args.n:
        for part in args.n.split(","):
            ns.append(int(part))
    if getattr(args, "log_range", None):
        lo, hi, points = args.log_range
        ns.extend(harness.log_spaced_ns(lo, hi, points))
    if not ns:
        raise ValueError("no input sizes given; use --n or --log-range")
    return tuple(dict.fromkeys(ns))  # dedupe, keep order


def _strategy(args) -> Strategy:
    return Strategy.from_name(args.strategy)


def _emit(table: Table, args) -> None:
    if args.out:
        emit_tsv(table, args.out)
    else:
        emit_tsv(table, sys.stdout.buffer)


def _note_seed(args) -> None:
    print(f"# generator={harness.GENERATOR} seed={args.seed}", file=sys.stderr)


def cmd_sort(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    keys = [int(line) for line in text.split()]
    schedule = Schedule(Fraction(args.factor))
    strategy = _strategy(args)
    if args.algorithm == "mi":
        outcome = merge_insertion(keys, strategy, schedule)
    elif args.algorithm == "one-two":
        outcome = one_two_insertion([], keys, strategy)
    else:
        outcome = combined_sort(keys, strategy, schedule)
    payload = "".join(f"{key}\n" for key in outcome.items).encode()
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
    print(f"comparisons: {outcome.comparisons}", file=sys.stderr)
    return 0


def cmd_count(args) -> int:
    cfg = ExperimentConfig(
        ns=_parse_ns(args),
        algorithm=args.algorithm,
        strategy=_strategy(args),
        factor=Fraction(args.factor),
        trials=args.trials,
        seed=args.seed,
        exhaustive=args.exhaustive,
    )
    _note_seed(args)
    stats = harness.run_experiment(cfg)
    table = Table(
        ["num_elements", "trials", "mean", "stddev", "normalized"],
        [[s.n, s.trials, s.mean, s.std, s.normalized] for s in stats],
    )
    _emit(table, args)
    return 0


def cmd_exact(args) -> int:
    import math

    ns = range(1, args.n_max + 1) if args.n_max else _parse_ns(args)
    strategy = _strategy(args)
    rows = []
    for n in ns:
        value = exact_analysis.exact_F(n, strategy)
        scaled = value * math.factorial(n)
        assert scaled.denominator == 1
        normalized = (float(value) - n * math.log2(n)) / n
        rows.append([n, scaled.numerator, float(value), normalized])
    table = Table(["n", "avg_times_factorial", "avg", "normalized"], rows)
    _emit(table, args)
    return 0


def cmd_dist(args) -> int:
    k = args.k
    width = probability.batch_width(k)
    if args.var == "mean":
        rows = [[i, float(probability.mean_Y(k, i))] for i in range(1, width + 1)]
        table = Table(["i", "EYi"], rows)
        _emit(table, args)
        return 0
    members = args.i or sorted({1, max(1, width // 2), width})
    if args.var == "y":
        tables = [probability.distribution_Y(k, i) for i in members]
        header = ["j"] + [f"Y{i}" for i in members]
        support = range(min(t.support.start for t in tables), 1 << k)
    else:
        tables = [probability.distribution_X(k, i) for i in members]
        header = ["j"] + [f"X{i}" for i in members]
        support = range(0, 1 << k)
    rows = [[j] + [float(t[j]) for t in tables] for j in support]
    _emit(Table(header, rows), args)
    return 0


def cmd_bound(args) -> int:
    import math

    ns = _parse_ns(args)
    rows = []
    for n in ns:
        nlogn = n * math.log2(n)
        rows.append(
            [
                n,
                (bounds_mod.lower_bound_log_factorial(n) - nlogn) / n,
                (bounds_mod.numeric_upper_bound_F(n) - nlogn) / n,
                -bounds_mod.c_of_x(bounds_mod.frac_log2_3n(n)),
                (bounds_mod.worst_case_W(n) - nlogn) / n,
            ]
        )
    table = Table(["num_elements", "lower", "upper", "c_term", "worst_case"], rows)
    _emit(table, args)
    return 0


def cmd_sweep_factor(args) -> int:
    _note_seed(args)
    factors = [part for part in args.factors.split(",")]
    table = harness.sweep_factor(
        _parse_ns(args), factors, _strategy(args), args.trials, args.seed
    )
    _emit(table, args)
    return 0


def cmd_compare_algos(args) -> int:
    _note_seed(args)
    table = harness.compare_algorithms(
        _parse_ns(args),
        trials=args.trials,
        seed=args.seed,
        strategy=_strategy(args),
        variant_factor=Fraction(args.factor) if args.factor != "1" else Fraction("1.03"),
    )
    _emit(table, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="experiment seed (default 0)")
    common.add_argument("--trials", type=int, default=None, help="trials per size (default: scaled 10..10000)")
    common.add_argument(
        "--strategy",
        default="left",
        choices=[s.value for s in Strategy],
        help="binary-insertion strategy (default left)",
    )
    common.add_argument("--factor", default="1", help="schedule stretch factor, e.g. 1.03 (default 1)")
    common.add_argument("--out", default=None, help="output file (default stdout)")

    sizes = argparse.ArgumentParser(add_help=False)
    sizes.add_argument("--n", default=None, help="comma-separated input sizes")
    sizes.add_argument(
        "--log-range",
        type=int,
        nargs=3,
        metavar=("LO", "HI", "POINTS"),
        default=None,
        help="log-spaced input sizes from LO to HI",
    )

    parser = argparse.ArgumentParser(
        prog="mergeinsertion",
        description="MergeInsertion sorting, comparison-count experiments, and exact analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", parents=[common], help="sort newline-separated integers")
    p.add_argument("input", nargs="?", default="-", help="input file ('-' for stdin)")
    p.add_argument("--algorithm", default="mi", choices=harness.ALGORITHMS)
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("count", parents=[common, sizes], help="mean comparison counts over random permutations")
    p.add_argument("--algorithm", default="mi", choices=harness.ALGORITHMS)
    p.add_argument("--exhaustive", action="store_true", help="enumerate all n! permutations (n <= 8)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("exact", parents=[common, sizes], help="exact average comparison counts")
    p.add_argument("--n-max", type=int, default=None, help="compute every size 1..N")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("dist", parents=[common], help="exact insertion distributions for one batch")
    p.add_argument("--k", type=int, required=True, help="batch index (>= 2)")
    p.add_argument("--var", default="y", choices=["y", "x", "mean"], help="table to emit")
    p.add_argument("--i", type=int, action="append", help="batch member index (repeatable)")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("bound", parents=[common, sizes], help="normalized lower/upper bound table")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep-factor", parents=[common, sizes], help="schedule-stretch sweep")
    p.add_argument("--factors", default="1.0,1.02,1.03,1.04,1.05", help="comma-separated factors")
    p.set_defaults(func=cmd_sweep_factor)

    p = sub.add_parser(
        "compare-algos",
        parents=[common, sizes],
        help="batched vs combined algorithm (--factor overrides the 1.03 variant column)",
    )
    p.set_defaults(func=cmd_compare_algos)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
