import math
from fractions import Fraction

import pytest

from mergeinsertion import InsertionState, PathCount, Strategy, cost, cost_insert, exact_F, exact_G
from mergeinsertion.exact_analysis import _cost
from oracles import brute_cost, initial_segments


def test_leaf_state():
    assert cost_insert(InsertionState(())) == PathCount(0, 1)


def test_single_insertion_state():
    # one pending element over two settled ones: three gaps, depths 1,2,2
    result = cost_insert(InsertionState((2,)))
    assert (result.path_length, result.leaves) == (5, 3)
    assert result.average == Fraction(5, 3)


def test_state_validation():
    with pytest.raises(ValueError):
        InsertionState((2, -1))
    assert InsertionState((2, 0, 1)).pending == 3
    assert InsertionState((2, 0, 1)).chain_elements == 5
    with pytest.raises(ValueError):
        PathCount(0, 0)


def test_cost_degenerate_and_errors():
    assert cost(1, 1) == 0
    assert cost(5, 5) == 0
    with pytest.raises(ValueError):
        cost(3, 2)
    with pytest.raises(ValueError):
        cost(0, 2)


def test_cost_matches_uncollapsed_enumeration():
    for s, e in ((1, 2), (1, 3), (3, 5), (2, 4)):
        for strategy in (Strategy.LEFT, Strategy.RIGHT):
            path, leaves = brute_cost(initial_segments(s, e), strategy)
            assert cost(s, e, strategy) == Fraction(path, leaves)


def test_collapse_soundness_small_states():
    # full-identity enumeration agrees with the collapsed recursion on a
    # spread of states with at most 12 chain elements
    states = [
        (2,),
        (4,),
        (2, 0),
        (2, 1),
        (6, 0),
        (4, 2),
        (2, 0, 0),
        (6, 0, 0),
        (4, 1, 2),
        (2, 1, 0, 1),
        (8, 0, 1),
        (3, 3, 3),
    ]
    for q in states:
        segments = tuple(tuple(("x", s, r) for r in range(size)) for s, size in enumerate(q))
        state = InsertionState(q)
        assert state.chain_elements <= 12
        for strategy in Strategy:
            path, leaves = brute_cost(segments, strategy)
            got = cost_insert(state, strategy)
            assert (got.path_length, got.leaves) == (path, leaves)


def test_insertion_phase_averages():
    assert exact_G(1) == 0
    assert exact_G(2) == Fraction(5, 3)
    assert exact_G(3) == Fraction(59, 15)
    with pytest.raises(ValueError):
        exact_G(0)


def test_table_anchors():
    assert exact_F(1) == 0
    assert exact_F(5) * math.factorial(5) == 832
    assert exact_F(8) * math.factorial(8) == 623232
    assert exact_F(15) * math.factorial(15) == 53153472153600


def test_average_times_factorial_is_integral():
    for n in range(1, 19):
        scaled = exact_F(n) * math.factorial(n)
        assert scaled.denominator == 1


def test_memoization_transparent():
    for q in ((2,), (4, 1), (2, 0, 1), (6, 0, 0)):
        cached = _cost(q, Strategy.LEFT, {})
        uncached = _cost(q, Strategy.LEFT, None)
        assert cached == uncached
        assert cost_insert(InsertionState(q)) == PathCount(*cached)


def test_strategy_invariance_small_sizes():
    # all four pivot rules give the same exact average up to n = 12; they
    # start to differ at n = 13
    for n in range(1, 13):
        values = {exact_F(n, strategy) for strategy in Strategy}
        assert len(values) == 1
    assert len({exact_F(13, strategy) for strategy in Strategy}) > 1


def test_left_strategy_never_worse_at_small_sizes():
    for n in range(2, 16):
        left = exact_F(n, Strategy.LEFT)
        assert all(left <= exact_F(n, strategy) for strategy in Strategy)
