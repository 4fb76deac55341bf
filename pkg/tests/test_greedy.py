"""Greedy threshold partitioning and the integer binary search on the answer."""

import math
import random

import pytest

from mergecut.core import (
    Infeasible,
    KOutOfRange,
    NonIntegerInput,
    NumString,
    apply_merges,
    piece_sums,
)
from mergecut.greedy import (
    fewest_merges,
    maxmin_merge_by_search,
    minimal_b_prefix,
    optimal_b_partition,
)
from mergecut.kcut_dp import cut_string_dp
from mergecut.oracle import gen_instance, oracle_max_b_partition

S1 = NumString((3, 1, 4, 1, 5, 9, 2, 6, 5))
S3 = NumString((5, 4, 5, 7, 1, 1, 4, 4, 5, 6))


def test_minimal_b_prefix():
    assert minimal_b_prefix(S3, 10) == 3
    assert minimal_b_prefix(S3, 10, start=3) == 7
    assert minimal_b_prefix(S3, 10, start=7) == 10
    assert minimal_b_prefix(S3, 100) is None
    assert minimal_b_prefix(S3, 5) == 1
    with pytest.raises(ValueError):
        minimal_b_prefix(S3, 0)
    with pytest.raises(IndexError):
        minimal_b_prefix(S3, 10, start=10)


def test_optimal_b_partition_examples():
    res = optimal_b_partition(S3, 10)
    assert res.piece_count == 3
    assert res.partition.cuts == (3, 7)
    assert piece_sums(S3, res.partition) == [14, 13, 15]

    res = optimal_b_partition(S1, 5)
    assert res.piece_count == 5
    assert res.merges == 4

    with pytest.raises(Infeasible):
        optimal_b_partition(NumString((2, 2, 2)), 7)


def test_b_at_most_minimum_needs_no_merges():
    res = optimal_b_partition(S1, 1)
    assert res.piece_count == S1.n
    assert res.merges == 0


def test_every_piece_reaches_threshold():
    rng = random.Random(52)
    for _ in range(300):
        n = rng.randint(1, 14)
        s = NumString(tuple(float(rng.randint(1, 20)) for _ in range(n)))
        b = rng.randint(1, 25)
        try:
            res = optimal_b_partition(s, b)
        except Infeasible:
            assert s.total < b
            continue
        assert all(x >= b for x in piece_sums(s, res.partition))
        assert res.merges == fewest_merges(s, b).merge_count


def test_fewest_merges_example():
    plan = fewest_merges(NumString((1, 1, 1, 1)), 2)
    assert plan.merge_count == 2
    assert apply_merges(NumString((1, 1, 1, 1)), plan).values == (2, 2)


def test_reversal_gives_same_piece_count():
    rng = random.Random(53)
    for _ in range(300):
        n = rng.randint(1, 14)
        s = NumString(tuple(float(rng.randint(1, 20)) for _ in range(n)))
        b = rng.randint(1, int(s.total))
        assert (optimal_b_partition(s, b).piece_count
                == optimal_b_partition(s.reversed(), b).piece_count)


def test_piece_count_never_increases_with_b():
    rng = random.Random(54)
    for _ in range(100):
        n = rng.randint(1, 12)
        s = NumString(tuple(float(rng.randint(1, 20)) for _ in range(n)))
        counts = [optimal_b_partition(s, b).piece_count
                  for b in range(1, int(s.total) + 1)]
        assert counts == sorted(counts, reverse=True)


def test_merge_count_sandwich():
    rng = random.Random(55)
    for _ in range(300):
        n = rng.randint(1, 14)
        s = NumString(tuple(float(rng.randint(1, 20)) for _ in range(n)))
        b = rng.randint(1, int(s.total))
        res = optimal_b_partition(s, b)
        assert math.ceil(res.n_below / 2) <= res.merges <= res.n_below


def test_agrees_with_exhaustive_reference():
    for seed in range(200):
        n = 1 + seed % 12
        s = gen_instance(seed, n, 20)
        total = int(s.total)
        for t in range(1, 11):
            b = max(1, round(t * total / 10))
            try:
                mine = optimal_b_partition(s, b).piece_count
            except Infeasible:
                with pytest.raises(Infeasible):
                    oracle_max_b_partition(s, b)
                continue
            assert mine == oracle_max_b_partition(s, b)


def test_search_examples():
    value, plan = maxmin_merge_by_search(S1, 3)
    assert value == 4
    assert plan.merge_count == 3
    assert apply_merges(S1, plan).minimum == 4

    value, plan = maxmin_merge_by_search(NumString((3, 1, 2, 1, 2, 1, 3, 3)), 5)
    assert value == 4
    assert plan.merge_count == 5

    value, plan = maxmin_merge_by_search(S1, 8)
    assert value == 36
    assert plan.merge_count == 8

    value, plan = maxmin_merge_by_search(S1, 0)
    assert value == 1
    assert plan.merge_count == 0


def test_search_rejects_non_integer_values():
    with pytest.raises(NonIntegerInput):
        maxmin_merge_by_search(NumString((2.5, 3.0, 4.0)), 1)


def test_search_rejects_bad_k():
    with pytest.raises(KOutOfRange):
        maxmin_merge_by_search(S1, -1)
    with pytest.raises(KOutOfRange):
        maxmin_merge_by_search(S1, 9)


def test_search_plan_realizes_reported_value():
    rng = random.Random(56)
    for _ in range(300):
        n = rng.randint(2, 14)
        s = NumString(tuple(float(rng.randint(1, 20)) for _ in range(n)))
        k = rng.randint(0, n - 1)
        value, plan = maxmin_merge_by_search(s, k)
        assert plan.merge_count == k
        assert apply_merges(s, plan).minimum == value


def test_search_agrees_with_dp():
    for seed in range(200):
        n = 2 + seed % 11
        s = gen_instance(seed, n, 20)
        for k in range(n):
            value, _ = maxmin_merge_by_search(s, k)
            assert value == cut_string_dp(s, n - k)[0]
