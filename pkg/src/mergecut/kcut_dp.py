"""Max-min cutting via dynamic programming over prefix-sum points.

d(i, j) is the best achievable minimum pairwise distance over j-point
subsets of the first i points that include point i, and s(i, j) records the
predecessor index realizing it. Rows are filled in increasing j with

    d(i, j) = max over i' in [j-1, i-1] of min(d(i', j-1), p_i - p_i')

seeded by the sentinel d(i, 1) = +inf, which makes the j = 2 row come out as
p_i - p_1. The overall j-subset answer can always be read at d(m, j): sliding
the last chosen point out to p_m never shrinks any distance.

The inner maximization is a binary search, not a scan. Along i' the first
argument is nondecreasing while the second strictly decreases, so the best
predecessor sits where the two envelopes cross, and only the two sandwiching
candidates matter. Equivalently, the crossing is where d(i', j-1) + p_i'
(strictly increasing) passes p_i, which lets one searchsorted call place it
for every i of a row at once; value ties between the two candidates go to
the right one, and when the left candidate wins, the recorded predecessor is
the leftmost index of its d-value plateau. The results are identical to a
full scan, cell for cell.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from itertools import accumulate

import numpy as np

from .core import (
    CutValue,
    NumString,
    Partition,
    PointSet,
    QOutOfRange,
    TooFewPoints,
    TooShort,
    format_number,
    to_points,
)

__all__ = [
    "DpTables",
    "fill_tables",
    "diversity_dp",
    "cut_string_dp",
    "cut2_linear",
    "cut3_linear",
]


@dataclass
class DpTables:
    """Filled d- and s-tables, 1-based in both the point index i and the size j."""

    points: tuple[float, ...]
    jmax: int
    _d: list = field(repr=False)
    _s: list = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.points)

    def value(self, i: int, j: int) -> float | None:
        """d(i, j), or None where the cell is undefined (i < j)."""
        if not (1 <= i <= self.m and 1 <= j <= self.jmax):
            raise IndexError(f"cell ({i}, {j}) outside tables of size ({self.m}, {self.jmax})")
        if i < j:
            return None
        return float(self._d[j][i])

    def pred(self, i: int, j: int) -> int | None:
        """s(i, j), or None where undefined (i < j or j < 2)."""
        if not (1 <= i <= self.m and 1 <= j <= self.jmax):
            raise IndexError(f"cell ({i}, {j}) outside tables of size ({self.m}, {self.jmax})")
        if i < j or j < 2:
            return None
        return int(self._s[j][i])

    def best(self, j: int) -> float:
        """Optimal j-subset value, read at the last point."""
        v = self.value(self.m, j)
        assert v is not None
        return v

    def subset(self, j: int) -> tuple[int, ...]:
        """Witness subset for best(j), as 0-based point indices; always has
        the first and the last point at its ends."""
        if not 2 <= j <= self.jmax:
            raise IndexError(f"no witness for j={j}")
        chain = [self.m]
        i = self.m
        for jj in range(j, 1, -1):
            i = int(self._s[jj][i])
            chain.append(i)
        return tuple(x - 1 for x in reversed(chain))

    def format_trace(self, j: int) -> str:
        """The backtracking steps for best(j): each s-lookup and the partial
        subset (as point values) it produces, "/" on the closing row."""
        if not 2 <= j <= self.jmax:
            raise IndexError(f"no trace for j={j}")
        lines = [f"trace j={j}", "s(i,j) | P'"]
        chosen: list[float] = []
        i = self.m
        for jj in range(j, 1, -1):
            pred = int(self._s[jj][i])
            chosen.insert(0, self.points[pred - 1])
            body = "{" + ", ".join(format_number(v) for v in chosen) + "}"
            lines.append(f"s({i},{jj}) = {pred} | {body}")
            i = pred
        chosen.append(self.points[self.m - 1])
        body = "{" + ", ".join(format_number(v) for v in chosen) + "}"
        lines.append(f"/ | {body}")
        return "\n".join(lines)

    def format_tables(self) -> str:
        """Both tables as text, rows j, columns i, with "/" for undefined cells."""
        lines = [f"d(i,j) i=2..{self.m}"]
        for j in range(2, self.jmax + 1):
            cells = ["/" if i < j else format_number(self._d[j][i]) for i in range(2, self.m + 1)]
            lines.append(f"j={j} | " + " ".join(cells))
        lines.append(f"s(i,j) i=2..{self.m}")
        for j in range(2, self.jmax + 1):
            cells = ["/" if i < j else str(int(self._s[j][i])) for i in range(2, self.m + 1)]
            lines.append(f"j={j} | " + " ".join(cells))
        return "\n".join(lines)


def fill_tables(p: PointSet, jmax: int) -> DpTables:
    """Fill d and s up to subset size jmax.

    One row costs O(m log m): two vectorized binary searches plus
    elementwise selects. Memory is O(m * jmax).
    """
    pts = p.points
    m = len(pts)
    if jmax < 1:
        raise TooFewPoints(f"subset size must be at least 1, got {jmax}")
    if m < jmax:
        raise TooFewPoints(f"need at least {jmax} points, have {m}")
    pp = np.empty(m + 1, dtype=np.float64)
    pp[0] = np.nan
    pp[1:] = pts
    row1 = np.full(m + 1, np.inf, dtype=np.float64)
    row1[0] = np.nan
    d: list = [None, row1]
    s: list = [None, None]
    for j in range(2, jmax + 1):
        lo = j - 1
        prev = d[j - 1]
        prev_def = prev[lo:]              # d(i', j-1) for i' = lo..m, nondecreasing
        env = prev_def + pp[lo:]          # increasing envelope d(i', j-1) + p_i'
        pi = pp[j:]                       # p_i for i = j..m
        ii = np.arange(j, m + 1)
        a = lo + np.searchsorted(env, pi, side="left") - 1  # last i' with d(i',j-1) < p_i - p_i'
        has_a = a >= lo
        va = np.where(has_a, prev[np.clip(a, lo, m)], -np.inf)
        b = a + 1                         # first i' at or past the crossing; equals lo when a is absent
        has_b = b <= ii - 1
        vb = np.where(has_b, pi - pp[np.clip(b, lo, m)], -np.inf)
        use_b = vb >= va                  # value ties go to the right candidate
        row = np.where(use_b, vb, va)
        left_of_plateau = lo + np.searchsorted(prev_def, row, side="left")
        pred = np.where(use_b, b, left_of_plateau)
        d_row = np.full(m + 1, np.nan, dtype=np.float64)
        d_row[j:] = row
        s_row = np.full(m + 1, -1, dtype=np.int64)
        s_row[j:] = pred
        d.append(d_row)
        s.append(s_row)
    return DpTables(points=pts, jmax=jmax, _d=d, _s=s)


def diversity_dp(p: PointSet, j: int) -> tuple[CutValue, tuple[int, ...]]:
    """Pick j of the given points maximizing the minimum pairwise distance.

    Returns the optimum and a witness subset (0-based indices into p) that
    contains the first and the last point.
    """
    if not isinstance(p, PointSet):
        p = PointSet(tuple(float(x) for x in p))
    m = len(p.points)
    if j < 2:
        raise TooFewPoints(f"subset size must be at least 2, got {j}")
    if m < j:
        raise TooFewPoints(f"need at least {j} points, have {m}")
    tables = fill_tables(p, j)
    return tables.best(j), tables.subset(j)


def cut_string_dp(s: NumString, q: int) -> tuple[CutValue, Partition]:
    """Cut the string into exactly q pieces maximizing the minimum piece sum.

    Piece sums are gaps between selected prefix-sum points, so this is the
    point problem with j = q + 1 and the two endpoints forced.
    """
    n = s.n
    if not 1 <= q <= n:
        raise QOutOfRange(f"q={q} outside [1, {n}]")
    value, idx = diversity_dp(to_points(s), q + 1)
    cuts = tuple(i for i in idx if 0 < i < n)
    return value, Partition(cuts)


def cut2_linear(s: NumString) -> tuple[CutValue, Partition]:
    """Single best cut: the interior prefix point nearest to half the total.

    min(x, total - x) peaks at the midpoint, so only the one or two interior
    points around it can be optimal. Ties pick the leftmost cut.
    """
    n = s.n
    if n < 2:
        raise TooShort(f"need at least 2 values to cut in two, got {n}")
    pre = list(accumulate(s.values))
    total = pre[-1]
    interior = pre[:-1]  # prefix sums at cut positions 1..n-1
    t = bisect.bisect_left(interior, total / 2, 1, len(interior))
    best_v = -1.0
    best_cut = 0
    for idx in (t - 1, t):
        if 0 <= idx < len(interior):
            v = min(interior[idx], total - interior[idx])
            if v > best_v:
                best_v = v
                best_cut = idx + 1
    return best_v, Partition((best_cut,))


def cut3_linear(s: NumString) -> tuple[CutValue, Partition]:
    """Two cuts: some optimum places a cut at or next to a third of the total.

    For each of the two third-points, the interior prefix points around it
    are candidate first cuts (a constant number of them); the other cut is
    then the best single cut of the complementary side, found the same way
    as in cut2_linear. Both completions of every candidate are tried.
    """
    n = s.n
    if n < 3:
        raise TooShort(f"need at least 3 values to cut in three, got {n}")
    pre = list(accumulate(s.values))
    total = pre[-1]
    interior = pre[:-1]
    last = len(interior)  # interior cut positions are 1..last, interior[i-1] is position i
    cand: set[int] = set()
    for tau in (total / 3, 2 * total / 3):
        t = bisect.bisect_left(interior, tau)
        for off in (-1, 0, 1):
            if 0 <= t + off < last:
                cand.add(t + off)
    best_v = -1.0
    best_cuts = (1, 2)
    for ai in sorted(cand):
        va = interior[ai]
        # second cut to the right: nearest interior point to the midpoint of [va, total]
        t = bisect.bisect_left(interior, (va + total) / 2, ai + 1, last)
        for idx in (t - 1, t):
            if ai + 1 <= idx < last:
                w = interior[idx]
                v = min(va, w - va, total - w)
                if v > best_v:
                    best_v = v
                    best_cuts = (ai + 1, idx + 1)
        # second cut to the left: nearest interior point to half of va
        t = bisect.bisect_left(interior, va / 2, 0, ai)
        for idx in (t - 1, t):
            if 0 <= idx < ai:
                w = interior[idx]
                v = min(w, va - w, total - va)
                if v > best_v:
                    best_v = v
                    best_cuts = (idx + 1, ai + 1)
    return best_v, Partition(best_cuts)
