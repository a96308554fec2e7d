"""Seeded experiment runner and TSV emission for comparison-count studies.

Permutations come from a named, platform-independent generator (PCG64
seeded per (seed, n)), so the same configuration always reproduces the
same counts byte for byte. Means are accumulated in exact integer
arithmetic before the final division; the reported normalized mean is
(mean - n log2 n) / n.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np

from .sorter import (
    Schedule,
    combined_sort,
    merge_insertion,
    one_two_insertion,
)
from .strategies import Strategy

GENERATOR = "pcg64"  # identity of the permutation stream, for output metadata

ALGORITHMS = ("mi", "one-two", "combined")

_EXHAUSTIVE_MAX = 8


@dataclass(frozen=True)
class ExperimentConfig:
    """One comparison-count experiment: sizes, algorithm, and sampling."""

    ns: tuple[int, ...]
    algorithm: str = "mi"
    strategy: Strategy = Strategy.LEFT
    factor: Fraction = Fraction(1)
    trials: int | None = None
    seed: int = 0
    exhaustive: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "ns", tuple(int(n) for n in self.ns))
        object.__setattr__(self, "factor", Fraction(self.factor))
        if not self.ns:
            raise ValueError("need at least one input size")
        if any(n < 1 for n in self.ns):
            raise ValueError("input sizes must be at least 1")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}")
        Schedule(self.factor)  # validates the factor range
        if self.trials is not None and self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.exhaustive and any(n > _EXHAUSTIVE_MAX for n in self.ns):
            raise ValueError(f"exhaustive mode enumerates n! permutations; limited to n <= {_EXHAUSTIVE_MAX}")


@dataclass(frozen=True)
class TrialStats:
    """Aggregated counts for one input size."""

    n: int
    trials: int
    mean: float
    std: float
    normalized: float


def default_trials(n: int) -> int:
    """Trial schedule 10..10000, shrinking with n (10^7 / n in between)."""
    return max(10, min(10000, 10_000_000 // n))


def normalized_mean(mean: float, n: int) -> float:
    return (mean - n * math.log2(n)) / n


def _count_fn(algorithm: str, strategy: Strategy, factor: Fraction):
    schedule = Schedule(factor)
    if algorithm == "mi":
        return lambda perm: merge_insertion(perm, strategy, schedule).comparisons
    if algorithm == "one-two":
        return lambda perm: one_two_insertion([], perm, strategy).comparisons
    return lambda perm: combined_sort(perm, strategy, schedule).comparisons


def _rng(seed: int, n: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, n))))


def _stats_from_counts(n: int, counts: list[int]) -> TrialStats:
    mean = Fraction(sum(counts), len(counts))
    std = float(statistics.stdev(counts)) if len(counts) > 1 else 0.0
    return TrialStats(n, len(counts), float(mean), std, normalized_mean(float(mean), n))


def exhaustive_counts(
    n: int,
    algorithm: str = "mi",
    strategy: Strategy = Strategy.LEFT,
    factor: Fraction = Fraction(1),
) -> list[int]:
    """Comparison counts over all n! input orders (n <= 8)."""
    if n > _EXHAUSTIVE_MAX:
        raise ValueError(f"exhaustive enumeration limited to n <= {_EXHAUSTIVE_MAX}")
    count = _count_fn(algorithm, strategy, factor)
    return [count(list(perm)) for perm in permutations(range(n))]


def exhaustive_mean(
    n: int,
    algorithm: str = "mi",
    strategy: Strategy = Strategy.LEFT,
    factor: Fraction = Fraction(1),
) -> Fraction:
    """Exact mean comparison count over all n! input orders (n <= 8)."""
    counts = exhaustive_counts(n, algorithm, strategy, factor)
    return Fraction(sum(counts), len(counts))


def run_experiment(cfg: ExperimentConfig) -> list[TrialStats]:
    """Sort seeded random permutations (or every permutation, in
    exhaustive mode) for each configured size and aggregate the counts."""
    count = _count_fn(cfg.algorithm, cfg.strategy, cfg.factor)
    results = []
    for n in cfg.ns:
        if cfg.exhaustive:
            counts = exhaustive_counts(n, cfg.algorithm, cfg.strategy, cfg.factor)
        else:
            trials = cfg.trials if cfg.trials is not None else default_trials(n)
            rng = _rng(cfg.seed, n)
            counts = [count(rng.permutation(n).tolist()) for _ in range(trials)]
        results.append(_stats_from_counts(n, counts))
    return results


@dataclass
class Table:
    """Rectangular result table: one header row plus data rows."""

    header: list[str]
    rows: list[list]


def _factor_label(factor) -> str:
    if isinstance(factor, str):
        return factor
    return repr(float(Fraction(factor)))


def sweep_factor(
    ns,
    factors,
    strategy: Strategy = Strategy.LEFT,
    trials: int | None = None,
    seed: int = 0,
) -> Table:
    """Normalized means of the batched sort under stretched schedules,
    one column per factor; every factor sees the same permutations."""
    factor_pairs = [(Fraction(f), _factor_label(f)) for f in factors]
    header = ["num_elements"] + [label for _, label in factor_pairs]
    counters = [_count_fn("mi", strategy, f) for f, _ in factor_pairs]
    rows = []
    for n in ns:
        t = trials if trials is not None else default_trials(n)
        sums = [0] * len(counters)
        rng = _rng(seed, n)
        for _ in range(t):
            perm = rng.permutation(n).tolist()
            for col, count in enumerate(counters):
                sums[col] += count(perm)
        row = [n] + [normalized_mean(s / t, n) for s in sums]
        rows.append(row)
    return Table(header, rows)


def compare_algorithms(
    ns,
    trials: int | None = None,
    seed: int = 0,
    strategy: Strategy = Strategy.LEFT,
    variant_factor: Fraction = Fraction("1.03"),
) -> Table:
    """Normalized means of the batched sort, the combined algorithm, and
    the combined algorithm under the stretched schedule, on shared
    permutations."""
    label = f"combined-f{_factor_label(variant_factor)}"
    counters = [
        _count_fn("mi", strategy, Fraction(1)),
        _count_fn("combined", strategy, Fraction(1)),
        _count_fn("combined", strategy, Fraction(variant_factor)),
    ]
    header = ["num_elements", "mi", "combined", label]
    rows = []
    for n in ns:
        t = trials if trials is not None else default_trials(n)
        sums = [0] * len(counters)
        rng = _rng(seed, n)
        for _ in range(t):
            perm = rng.permutation(n).tolist()
            for col, count in enumerate(counters):
                sums[col] += count(perm)
        rows.append([n] + [normalized_mean(s / t, n) for s in sums])
    return Table(header, rows)


def _cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_tsv(table: Table, destination) -> int:
    """Write the table as UTF-8 TSV (header row first, '\\n' rows, '.'
    decimals); returns the number of bytes written.

    ``destination`` is a path or a binary file-like object.
    """
    lines = ["\t".join(table.header)]
    for row in table.rows:
        if len(row) != len(table.header):
            raise ValueError("table rows must match the header width")
        lines.append("\t".join(_cell(v) for v in row))
    data = ("\n".join(lines) + "\n").encode("utf-8")
    if hasattr(destination, "write"):
        destination.write(data)
    else:
        with open(destination, "wb") as fh:
            fh.write(data)
    return len(data)


def log_spaced_ns(lo: int, hi: int, points: int) -> tuple[int, ...]:
    """Geometrically spaced integer sizes from lo to hi inclusive."""
    if lo < 1 or hi < lo or points < 1:
        raise ValueError("need 1 <= lo <= hi and at least one point")
    if points == 1:
        return (lo,)
    ratio = (hi / lo) ** (1.0 / (points - 1))
    ns = sorted({max(lo, min(hi, round(lo * ratio ** i))) for i in range(points)})
    return tuple(ns)
