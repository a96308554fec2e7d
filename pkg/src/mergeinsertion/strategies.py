"""Binary insertion with pluggable pivot-selection strategies.

Inserting into m sorted candidates walks a decision tree whose m + 1
leaves (the possible gaps) sit on at most two adjacent depth levels.
Which gaps get the shorter paths is decided by the pivot rule: the
classic midpoint rules (center-left, center-right) spread them around,
while the skewed rules pack every short path at the low end (left) or
the high end (right) of the range. Every element comparison is charged
to a Tally, and nothing else ever touches the counter.
"""

from __future__ import annotations

import enum
import operator
from collections.abc import Callable
from functools import lru_cache

from .sequence import PosSequence


class Strategy(enum.Enum):
    """Pivot-selection rule for binary insertion."""

    CENTER_LEFT = "center-left"
    CENTER_RIGHT = "center-right"
    LEFT = "left"
    RIGHT = "right"

    @classmethod
    def from_name(cls, name: str) -> "Strategy":
        for strategy in cls:
            if strategy.value == name:
                return strategy
        names = ", ".join(s.value for s in cls)
        raise ValueError(f"unknown strategy {name!r}; expected one of: {names}")


class Tally:
    """Monotone comparison counter; one increment per counted comparison."""

    __slots__ = ("count",)

    def __init__(self, count: int = 0) -> None:
        self.count = count

    def __repr__(self) -> str:
        return f"Tally({self.count})"


def pivot_index(n: int, strategy: Strategy) -> int:
    """1-based pivot position among ``n`` sorted candidates.

    With k = floor(log2 n): center-left picks floor((n+1)/2), center-right
    ceil((n+1)/2), left max(n - 2^k + 1, 2^(k-1)) and right
    min(2^k, n - 2^(k-1) + 1).
    """
    if n < 1:
        raise ValueError("pivot needs at least one candidate")
    full = 1 << (n.bit_length() - 1)
    if strategy is Strategy.CENTER_LEFT:
        return (n + 1) // 2
    if strategy is Strategy.CENTER_RIGHT:
        return (n + 2) // 2
    if strategy is Strategy.LEFT:
        return max(n - full + 1, full >> 1)
    return min(full, n - (full >> 1) + 1)


def binary_insert(
    item,
    chain: PosSequence,
    lo: int,
    hi: int,
    strategy: Strategy,
    tally: Tally,
    less: Callable = operator.lt,
) -> int:
    """Position in [lo, hi] where ``item`` belongs within chain[lo:hi].

    chain[lo:hi] must be sorted ascending and contain no key equal to
    ``item``. Each pivot comparison adds one to ``tally``; inserting the
    item at the returned position keeps the chain sorted.
    """
    if lo > hi:
        raise IndexError(f"invalid range [{lo}, {hi})")
    n = hi - lo
    get = chain.get
    count = 0
    while n > 0:
        full = 1 << (n.bit_length() - 1)
        if strategy is Strategy.LEFT:
            c = n - full + 1
            half = full >> 1
            if c < half:
                c = half
        elif strategy is Strategy.CENTER_LEFT:
            c = (n + 1) >> 1
        elif strategy is Strategy.CENTER_RIGHT:
            c = (n + 2) >> 1
        else:
            c = n - (full >> 1) + 1
            if c > full:
                c = full
        idx = lo + c - 1
        count += 1
        if less(item, get(idx)):
            n = c - 1
        else:
            lo = idx + 1
            n -= c
    tally.count += count
    return lo


@lru_cache(maxsize=None)
def decision_depths(m: int, strategy: Strategy) -> tuple[int, ...]:
    """Comparison count for each of the m + 1 gaps of an m-candidate insertion.

    The depths take at most two consecutive values; exactly
    2^ceil(log2(m+1)) - (m+1) gaps get the shorter one.
    """
    if m < 0:
        raise ValueError("candidate count must be non-negative")
    depths = []
    for gap in range(m + 1):
        n, g, used = m, gap, 0
        while n > 0:
            c = pivot_index(n, strategy)
            used += 1
            if g < c:
                n = c - 1
            else:
                g -= c
                n -= c
        depths.append(used)
    return tuple(depths)
