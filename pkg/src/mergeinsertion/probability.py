"""Exact distributions for the batched insertion phase.

When batch k begins, the main chain holds the 2 t(k-1) settled elements
x_1 < ... < x_(2 t(k-1)) plus the larger partners a_(t(k-1)+1) .. a_t(k);
the batch members b_(t(k-1)+i) are then binary-inserted from the top
down. Everything here is evaluated in exact rational arithmetic:

* ``p_X``:  where a batch member finally lands among the non-batch
  elements (gap index j means between x_j and x_(j+1), with the
  partners counted as x's).
* ``p_Y``:  into how many chain elements a batch member is inserted.
* ``p_Y_recurrence``:  the helper variable behind p_Y, counting how many
  of the next q batch members settle below a given partner, evaluated
  by its two-term recurrence.

Factorials overflow machine words almost immediately, so all mass
functions return ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .sorter import batch_bound

_ZERO = Fraction(0)
_ONE = Fraction(1)


def batch_width(k: int) -> int:
    """Number of elements inserted by batch k: t(k) - t(k-1)."""
    return batch_bound(k) - batch_bound(k - 1)


def _check_member(k: int, i: int) -> None:
    if k < 2:
        raise ValueError("batch index must be at least 2")
    width = batch_width(k)
    if not 1 <= i <= width:
        raise ValueError(f"member index i={i} outside 1..{width} for batch {k}")


def p_X(k: int, i: int, j: int) -> Fraction:
    """Probability that b_(t(k-1)+i) lands in gap j of x_1 .. x_(2^k).

    Gap 0 is below x_1 and gap 2^k - 1 is between x_(2^k - 1) and
    x_(2^k); the member can never land above its own partner, so the
    mass is zero from gap 2 t(k-1) + i on. Raises ValueError when j is
    outside 0 .. 2^k - 1.
    """
    _check_member(k, i)
    if not 0 <= j <= (1 << k) - 1:
        raise ValueError(f"gap index j={j} outside 0..{(1 << k) - 1} for batch {k}")
    t = batch_bound(k - 1)
    if j <= 2 * t:
        num = (1 << (2 * i - 2)) * factorial(t + i - 1) ** 2 * factorial(2 * t)
        den = factorial(t) ** 2 * factorial(2 * t + 2 * i - 1)
        return Fraction(num, den)
    if j < 2 * t + i:
        exp = 4 * t - 2 * j + 2 * i - 2
        num = (1 << exp) * factorial(t + i - 1) ** 2 * factorial(2 * j - 2 * t)
        den = factorial(j - t) ** 2 * factorial(2 * t + 2 * i - 1)
        return Fraction(num, den)
    return _ZERO


def p_Y(k: int, i: int, j: int) -> Fraction:
    """Probability that b_(t(k-1)+i) is inserted into exactly j elements.

    Zero outside the support 2 t(k-1) + i - 1 <= j <= 2^k - 1. The first
    inserted member of a full batch (i = t(k) - t(k-1)) always sees
    2^k - 1 elements, so its distribution is a point mass there.
    """
    _check_member(k, i)
    t = batch_bound(k - 1)
    tk = batch_bound(k)
    lo = 2 * t + i - 1
    hi = (1 << k) - 1
    if not lo <= j <= hi:
        return _ZERO
    num = (1 << (j - lo)) * factorial(2 * tk - i - j - 1) * factorial(i + j) * factorial(tk - 1)
    den = factorial(j - lo) * factorial(hi - j) * factorial(2 * tk - 1) * factorial(t + i - 1)
    return Fraction(num, den)


@lru_cache(maxsize=None)
def _y_tilde(T: int, q: int, j: int) -> Fraction:
    # T = t(k-1) + i is all the recurrence ever depends on
    if j < 0 or j > q:
        return _ZERO
    if q == 0:
        return _ONE
    den = 2 * T + 2 * q - 1
    below = Fraction(2 * T + j - 1, den)
    above = Fraction(2 * q - j - 1, den)
    return below * _y_tilde(T, q - 1, j - 1) + above * _y_tilde(T, q - 1, j)


def _y_tilde_closed(T: int, q: int, j: int) -> Fraction:
    """Closed form of the recurrence; kept separate as a cross-check."""
    if j < 0 or j > q:
        return _ZERO
    num = factorial(2 * q - j) * (1 << j) * factorial(2 * T + j - 1) * factorial(T + q - 1)
    den = factorial(j) * factorial(q - j) * factorial(2 * T + 2 * q - 1) * factorial(T - 1)
    return Fraction(num, den)


def p_Y_recurrence(k: int, i: int, q: int, j: int) -> Fraction:
    """Probability that j of the next q batch members settle below the
    partner of member i, via the two-term recurrence.

    For q = 0 this is 1 at j = 0 and 0 elsewhere; j outside 0..q has no
    mass. Shifting by 2 t(k-1) + i - 1 at q = t(k) - t(k-1) - i
    recovers p_Y.
    """
    _check_member(k, i)
    if q < 0:
        raise ValueError("q must be non-negative")
    T = batch_bound(k - 1) + i
    # fill the memo bottom-up over the cone below (q, j) so the recursion
    # never runs more than one level deep, whatever q is
    for level in range(1, q):
        lo = max(0, j - (q - level))
        for jj in range(lo, min(level, j) + 1):
            _y_tilde(T, level, jj)
    return _y_tilde(T, q, j)


def mean_Y(k: int, i: int) -> Fraction:
    """Expected number of elements b_(t(k-1)+i) is inserted into."""
    _check_member(k, i)
    t = batch_bound(k - 1)
    lo = 2 * t + i - 1
    hi = (1 << k) - 1
    total = _ZERO
    for j in range(lo, hi + 1):
        total += j * p_Y(k, i, j)
    return total


@dataclass(frozen=True)
class DistTable:
    """Exact probability table for one insertion random variable.

    ``kind`` is "X", "Y" or "Ytilde" (the latter carries its q);
    ``mass`` maps support points to their exact probabilities and must
    sum to exactly 1.
    """

    kind: str
    k: int
    i: int
    q: int | None
    support: range
    mass: dict

    def __post_init__(self) -> None:
        total = sum(self.mass.values(), _ZERO)
        if total != 1:
            raise ValueError(f"{self.kind} table mass sums to {total}, not 1")
        if any(v < 0 for v in self.mass.values()):
            raise ValueError("negative probability mass")

    def __getitem__(self, j: int) -> Fraction:
        return self.mass.get(j, _ZERO)

    def mean(self) -> Fraction:
        total = _ZERO
        for j, p in self.mass.items():
            total += j * p
        return total

    def cdf(self, j0: int) -> Fraction:
        total = _ZERO
        for j, p in self.mass.items():
            if j <= j0:
                total += p
        return total


def distribution_X(k: int, i: int) -> DistTable:
    support = range(0, 1 << k)
    mass = {j: p_X(k, i, j) for j in support}
    return DistTable("X", k, i, None, support, mass)


def distribution_Y(k: int, i: int) -> DistTable:
    t = batch_bound(k - 1)
    support = range(2 * t + i - 1, 1 << k)
    mass = {j: p_Y(k, i, j) for j in support}
    return DistTable("Y", k, i, None, support, mass)


def distribution_Y_tilde(k: int, i: int, q: int) -> DistTable:
    support = range(0, q + 1)
    mass = {j: p_Y_recurrence(k, i, q, j) for j in support}
    return DistTable("Ytilde", k, i, q, support, mass)
