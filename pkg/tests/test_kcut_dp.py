"""DP tables, their golden values, and the linear two- and three-piece cuts."""

import random

import pytest

from mergecut.core import (
    NumString,
    PointSet,
    QOutOfRange,
    TooFewPoints,
    TooShort,
    piece_sums,
    to_points,
)
from mergecut.kcut_dp import (
    cut2_linear,
    cut3_linear,
    cut_string_dp,
    diversity_dp,
    fill_tables,
)
from mergecut.oracle import gen_instance, oracle_diversity, oracle_maxmin_cut
from refimpl import best_partition_value, scan_dp

P9 = PointSet((0, 3, 4, 6, 7, 9, 10, 13, 16))
S1 = NumString((3, 1, 4, 1, 5, 9, 2, 6, 5))

# d and s for P9 with j up to 4, columns i = 2..9
GOLD_D = {
    2: [3, 4, 6, 7, 9, 10, 13, 16],
    3: [None, 1, 3, 3, 4, 4, 6, 7],
    4: [None, None, 1, 1, 3, 3, 4, 4],
}
GOLD_S = {
    2: [1, 1, 1, 1, 1, 1, 1, 1],
    3: [None, 2, 2, 3, 3, 4, 5, 6],
    4: [None, None, 3, 4, 4, 5, 6, 6],
}


def test_tables_match_golden_values():
    t = fill_tables(P9, 4)
    for j in (2, 3, 4):
        for col, i in enumerate(range(2, 10)):
            want_d = GOLD_D[j][col]
            want_s = GOLD_S[j][col]
            if want_d is None:
                assert t.value(i, j) is None
                assert t.pred(i, j) is None
            else:
                assert t.value(i, j) == want_d, (i, j)
                assert t.pred(i, j) == want_s, (i, j)


def test_formatted_dump_is_stable():
    t = fill_tables(P9, 4)
    assert t.format_tables() == (
        "d(i,j) i=2..9\n"
        "j=2 | 3 4 6 7 9 10 13 16\n"
        "j=3 | / 1 3 3 4 4 6 7\n"
        "j=4 | / / 1 1 3 3 4 4\n"
        "s(i,j) i=2..9\n"
        "j=2 | 1 1 1 1 1 1 1 1\n"
        "j=3 | / 2 2 3 3 4 5 6\n"
        "j=4 | / / 3 4 4 5 6 6"
    )
    assert t.format_trace(4) == (
        "trace j=4\n"
        "s(i,j) | P'\n"
        "s(9,4) = 6 | {9}\n"
        "s(6,3) = 3 | {4, 9}\n"
        "s(3,2) = 1 | {0, 4, 9}\n"
        "/ | {0, 4, 9, 16}"
    )


def test_backtrack_chain_and_witness():
    t = fill_tables(P9, 4)
    assert t.pred(9, 4) == 6
    assert t.pred(6, 3) == 3
    assert t.pred(3, 2) == 1
    assert t.best(4) == 4
    assert t.subset(4) == (0, 2, 5, 8)
    assert [P9.points[i] for i in t.subset(4)] == [0, 4, 9, 16]


def test_sentinel_and_second_row():
    t = fill_tables(P9, 2)
    for i in range(1, 10):
        assert t.value(i, 1) == float("inf")
    for i in range(2, 10):
        assert t.value(i, 2) == P9.points[i - 1] - P9.points[0]


def test_diversity_examples():
    value, idx = diversity_dp(P9, 4)
    assert value == 4
    assert idx == (0, 2, 5, 8)
    assert diversity_dp(PointSet((0, 10)), 2) == (10, (0, 1))
    value, idx = diversity_dp(PointSet(tuple(float(x) for x in range(10))), 3)
    assert value == 4
    assert idx == (0, 5, 9)


def test_diversity_rejects_bad_sizes():
    with pytest.raises(TooFewPoints):
        diversity_dp(PointSet((0, 10)), 1)
    with pytest.raises(TooFewPoints):
        diversity_dp(PointSet((0, 10)), 3)


def test_witness_is_valid_and_tight():
    rng = random.Random(91)
    for _ in range(200):
        m = rng.randint(2, 14)
        pts = [0.0]
        for _ in range(m - 1):
            pts.append(pts[-1] + rng.randint(1, 9) + rng.choice((0.0, 0.5)))
        p = PointSet(tuple(pts))
        j = rng.randint(2, m)
        value, idx = diversity_dp(p, j)
        assert len(idx) == j
        assert idx[0] == 0 and idx[-1] == m - 1
        gaps = [p.points[b] - p.points[a] for a, b in zip(idx, idx[1:])]
        assert min(gaps) == value


def test_rows_are_monotone_in_i():
    rng = random.Random(92)
    for _ in range(100):
        m = rng.randint(2, 14)
        pts = [0.0]
        for _ in range(m - 1):
            pts.append(pts[-1] + rng.randint(1, 9))
        t = fill_tables(PointSet(tuple(pts)), m)
        for j in range(2, m + 1):
            vals = [t.value(i, j) for i in range(j, m + 1)]
            assert vals == sorted(vals)


def test_binary_search_fill_equals_linear_scan():
    rng = random.Random(93)
    for _ in range(150):
        m = rng.randint(2, 14)
        pts = [0.0]
        for _ in range(m - 1):
            pts.append(pts[-1] + rng.randint(1, 9) + rng.choice((0.0, 0.5)))
        t = fill_tables(PointSet(tuple(pts)), m)
        ref = scan_dp(pts, m)
        for j in range(2, m + 1):
            for i in range(j, m + 1):
                assert t.value(i, j) == ref[j][i], (pts, i, j)


def test_diversity_agrees_with_oracle():
    rng = random.Random(94)
    for _ in range(150):
        m = rng.randint(2, 10)
        pts = [0.0]
        for _ in range(m - 1):
            pts.append(pts[-1] + rng.randint(1, 9))
        p = PointSet(tuple(pts))
        j = rng.randint(2, m)
        assert diversity_dp(p, j)[0] == oracle_diversity(p, j)


def test_cut_string_examples():
    s = NumString((3, 1, 2, 1, 2, 1, 3, 3))
    value, part = cut_string_dp(s, 3)
    assert value == 4
    assert part.cuts == (2, 5)
    assert min(piece_sums(s, part)) == 4

    value, part = cut_string_dp(S1, 1)
    assert (value, part.cuts) == (36, ())
    assert cut_string_dp(S1, 6)[0] == 4
    with pytest.raises(QOutOfRange):
        cut_string_dp(S1, 0)
    with pytest.raises(QOutOfRange):
        cut_string_dp(S1, 10)


def test_cut2_examples():
    value, part = cut2_linear(S1)
    assert (value, part.cuts) == (14, (5,))
    assert cut2_linear(NumString((5, 5)))[0] == 5
    value, part = cut2_linear(NumString((1, 9)))
    assert (value, part.cuts) == (1, (1,))
    with pytest.raises(TooShort):
        cut2_linear(NumString((7,)))


def test_cut3_examples():
    assert cut3_linear(NumString((3, 1, 2, 1, 2, 1, 3, 3)))[0] == 4
    value, part = cut3_linear(NumString((1, 1, 1)))
    assert (value, part.cuts) == (1, (1, 2))
    with pytest.raises(TooShort):
        cut3_linear(NumString((1, 2)))


def test_linear_cuts_agree_with_dp_and_brute_force():
    rng = random.Random(95)
    for _ in range(250):
        n = rng.randint(3, 12)
        vals = tuple(float(rng.randint(1, 20)) for _ in range(n))
        s = NumString(vals)
        v2, p2 = cut2_linear(s)
        assert v2 == cut_string_dp(s, 2)[0] == best_partition_value(vals, 2)
        assert min(piece_sums(s, p2)) == v2
        v3, p3 = cut3_linear(s)
        assert v3 == cut_string_dp(s, 3)[0] == best_partition_value(vals, 3)
        assert min(piece_sums(s, p3)) == v3


def test_cut_string_agrees_with_oracle():
    for seed in range(120):
        n = 1 + seed % 12
        s = gen_instance(seed, n, 20)
        for q in range(1, n + 1):
            assert cut_string_dp(s, q)[0] == oracle_maxmin_cut(s, q)
