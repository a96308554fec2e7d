import math

import pytest

from mergeinsertion import PosSequence, Strategy, Tally, binary_insert, decision_depths, pivot_index


def test_pivot_examples():
    # 5 candidates: skewed-left picks the 2nd, center-left the 3rd
    assert pivot_index(5, Strategy.LEFT) == 2
    assert pivot_index(5, Strategy.CENTER_LEFT) == 3
    assert pivot_index(5, Strategy.CENTER_RIGHT) == 3
    assert pivot_index(5, Strategy.RIGHT) == 4
    for strategy in Strategy:
        assert pivot_index(1, strategy) == 1
    with pytest.raises(ValueError):
        pivot_index(0, Strategy.LEFT)


def test_pivot_in_range():
    for strategy in Strategy:
        for n in range(1, 300):
            assert 1 <= pivot_index(n, strategy) <= n


def test_depths_known_patterns():
    assert decision_depths(4, Strategy.LEFT) == (2, 2, 2, 3, 3)
    assert decision_depths(4, Strategy.RIGHT) == (3, 3, 2, 2, 2)
    for strategy in Strategy:
        assert decision_depths(7, strategy) == (3,) * 8
    assert decision_depths(0, Strategy.LEFT) == (0,)


def test_two_layer_property_all_strategies():
    # depths span at most two consecutive values and the short-leaf count
    # is exactly 2^ceil(log2(m+1)) - (m+1)
    for strategy in Strategy:
        for m in range(0, 201):
            depths = decision_depths(m, strategy)
            long = math.ceil(math.log2(m + 1)) if m else 0
            short_expected = (1 << long) - (m + 1)
            assert set(depths) <= {long - 1, long}
            assert sum(1 for d in depths if d == long - 1) == short_expected


def test_short_leaf_placement():
    for m in range(1, 129):
        long = math.ceil(math.log2(m + 1))
        short = (1 << long) - (m + 1)
        left = decision_depths(m, Strategy.LEFT)
        right = decision_depths(m, Strategy.RIGHT)
        assert all(d == long - 1 for d in left[:short])
        assert all(d == long for d in left[short:])
        assert all(d == long for d in right[: m + 1 - short])
        assert all(d == long - 1 for d in right[m + 1 - short :])


def test_binary_insert_trivial_and_errors():
    chain = PosSequence.from_items([10, 20, 30])
    tally = Tally()
    assert binary_insert(15, chain, 2, 2, Strategy.LEFT, tally) == 2
    assert tally.count == 0
    with pytest.raises(IndexError):
        binary_insert(15, chain, 2, 1, Strategy.LEFT, tally)


def test_binary_insert_every_gap_every_strategy():
    # replaying each target gap must return the gap, keep the chain sorted,
    # and cost exactly the published decision depth
    for strategy in Strategy:
        for m in list(range(0, 65)) + [100, 150, 200]:
            chain = PosSequence.from_items([2 * v for v in range(m)])
            depths = decision_depths(m, strategy)
            for gap in range(m + 1):
                tally = Tally()
                item = 2 * gap - 1
                pos = binary_insert(item, chain, 0, m, strategy, tally)
                assert pos == gap
                assert tally.count == depths[gap]


def test_binary_insert_subrange():
    chain = PosSequence.from_items(list(range(0, 40, 2)))
    tally = Tally()
    pos = binary_insert(9, chain, 3, 12, Strategy.CENTER_LEFT, tally)
    assert pos == 5
    probed = chain.to_list()
    probed.insert(pos, 9)
    assert probed == sorted(probed)


def test_strategy_names_round_trip():
    for strategy in Strategy:
        assert Strategy.from_name(strategy.value) is strategy
    with pytest.raises(ValueError):
        Strategy.from_name("middle")
