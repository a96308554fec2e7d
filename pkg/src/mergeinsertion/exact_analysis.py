"""Exact average comparison counts via decision-tree path lengths.

The average cost over all input permutations equals the external path
length of the comparison tree divided by its number of leaves. The tree
for one insertion batch is evaluated exactly by tracking, per pending
element, only the number of settled elements in each partner gap:
branches that agree on those counts behave identically from then on and
are collapsed, with leaf multiplicities carried along. Path lengths and
leaf counts stay integers throughout; division happens once at the end,
so every value here is an exact rational.

The per-sort average F(n) follows the halving recurrence
F(n) = floor(n/2) + F(floor(n/2)) + G(ceil(n/2)), where G(m) sums the
batch costs of inserting m small elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .sorter import batch_bound
from .strategies import Strategy, decision_depths


@dataclass(frozen=True)
class InsertionState:
    """Settled-element counts seen by the pending insertions.

    ``q[0]`` counts chain elements below the lowest pending partner;
    ``q[s]`` (s >= 1) counts elements settled between partners s and
    s + 1. One element is pending per entry, inserted highest first.
    """

    q: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.q):
            raise ValueError("gap counts must be non-negative")

    @property
    def pending(self) -> int:
        return len(self.q)

    @property
    def chain_elements(self) -> int:
        """Elements the next pending insertion searches through."""
        if not self.q:
            return 0
        return len(self.q) - 1 + sum(self.q)


@dataclass(frozen=True)
class PathCount:
    """External path length and leaf count of a decision (sub)tree."""

    path_length: int
    leaves: int

    def __post_init__(self) -> None:
        if self.leaves < 1:
            raise ValueError("a decision tree has at least one leaf")

    @property
    def average(self) -> Fraction:
        return Fraction(self.path_length, self.leaves)


_COST_CACHE: dict = {}


def _cost(q: tuple[int, ...], strategy: Strategy, memo: dict | None) -> tuple[int, int]:
    if not q:
        return (0, 1)
    if memo is not None:
        hit = memo.get((q, strategy))
        if hit is not None:
            return hit
    r = len(q)
    elements = r - 1 + sum(q)
    depths = decision_depths(elements, strategy)
    path = 0
    leaves = 0
    index = 0
    for s in range(r):
        # landing anywhere in segment s bumps q[s]; the top entry is
        # dropped because its partner leaves the relevant chain
        if s < r - 1:
            child = q[:s] + (q[s] + 1,) + q[s + 1 : r - 1]
        else:
            child = q[: r - 1]
        child_path, child_leaves = _cost(child, strategy, memo)
        gaps = q[s] + 1
        path += gaps * child_path + child_leaves * sum(depths[index : index + gaps])
        leaves += gaps * child_leaves
        index += gaps
    result = (path, leaves)
    if memo is not None:
        memo[(q, strategy)] = result
    return result


def cost_insert(state: InsertionState, strategy: Strategy = Strategy.LEFT) -> PathCount:
    """Path length and leaf count for inserting all pending elements."""
    path, leaves = _cost(state.q, strategy, _COST_CACHE)
    return PathCount(path, leaves)


def cost(s: int, e: int, strategy: Strategy = Strategy.LEFT) -> Fraction:
    """Average comparisons to insert batch members b_(s+1) .. b_e into a
    chain already holding 2s settled elements below partner s + 1.

    ``e == s`` denotes an empty batch and costs 0; ``e < s`` or ``s < 1``
    is a domain error.
    """
    if s < 1:
        raise ValueError("batch start must be at least 1")
    if e < s:
        raise ValueError("batch end must not precede its start")
    if e == s:
        return Fraction(0)
    state = InsertionState((2 * s,) + (0,) * (e - s - 1))
    return cost_insert(state, strategy).average


def exact_G(n: int, strategy: Strategy = Strategy.LEFT) -> Fraction:
    """Average comparisons of the whole insertion phase for n small elements."""
    if n < 1:
        raise ValueError("need at least one element")
    total = Fraction(0)
    k = 2
    while batch_bound(k) < n:
        total += cost(batch_bound(k - 1), batch_bound(k), strategy)
        k += 1
    total += cost(batch_bound(k - 1), n, strategy)
    return total


@lru_cache(maxsize=None)
def exact_F(n: int, strategy: Strategy = Strategy.LEFT) -> Fraction:
    """Exact average comparison count over all n! input orders.

    F(n) * n! is always an integer: it is the external path length of a
    decision tree with n! integer-depth leaves.
    """
    if n < 1:
        raise ValueError("need at least one element")
    if n == 1:
        return Fraction(0)
    return n // 2 + exact_F(n // 2, strategy) + exact_G((n + 1) // 2, strategy)
