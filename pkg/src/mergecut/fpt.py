"""Bounded search tree for merging exactly k times, parameterized by k.

A merge can only raise the minimum, so some optimal plan merges the current
minimum number into its left or its right neighbor; branching on those two
choices and recursing gives a binary tree of height k. Ahead of the search
the string is shrunk to the 2k smallest values plus their immediate
neighbors: the other numbers survive k merges untouched in some optimal
plan, so they matter only through the smallest value removed, which
competes in every leaf's value. Boundaries between kept entries that were
not adjacent originally can never be merged across; a node whose minimum
has no mergeable neighbor is scored as a leaf, and any merges it did not
spend are paid out afterwards on pieces away from the minimum, which
leaves the value unchanged.

Each node owns its own unit sequence and a heap over the unit sums keyed
by (sum, leftmost original index), copied on branch. The heap is an exact
mirror of the sequence, no stale entries; debug mode re-checks that at
every node.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import accumulate
from math import inf

from .core import (
    CutValue,
    KOutOfRange,
    MergePlan,
    NumString,
    Partition,
    partition_to_merges,
)

__all__ = ["ReducedInstance", "SearchNode", "reduce_instance", "maxmin_merge_fpt"]


@dataclass(frozen=True)
class ReducedInstance:
    """The 2k smallest values and their immediate neighbors, in original order.

    kept holds (original index, value) pairs; left_kept / right_kept say per
    entry whether its original neighbor on that side is also kept. A False
    flag between two kept entries marks a boundary no merge may cross.
    removed_min is +inf when nothing was removed.
    """

    kept: tuple[tuple[int, float], ...]
    removed_min: float
    left_kept: tuple[bool, ...]
    right_kept: tuple[bool, ...]


def reduce_instance(s: NumString, k: int) -> ReducedInstance:
    """Shrink s to the values that k merges can possibly involve.

    The 2k smallest values (ties to the leftmost) are found with a heap;
    they and their immediate neighbors are kept. With n ≤ 4k nothing is
    removed and the reduction is the identity.
    """
    n = s.n
    if not 1 <= k <= n - 1:
        raise KOutOfRange(f"k={k} outside [1, {n - 1}]")
    vals = s.values
    if n <= 4 * k:
        kept_idx = range(n)
        removed_min = inf
    else:
        smalls = heapq.nsmallest(2 * k, range(n), key=lambda i: (vals[i], i))
        kept_set = set()
        for i in smalls:
            kept_set.update(j for j in (i - 1, i, i + 1) if 0 <= j < n)
        kept_idx = sorted(kept_set)
        removed = [vals[i] for i in range(n) if i not in kept_set]
        removed_min = min(removed) if removed else inf
    kept = tuple((i, vals[i]) for i in kept_idx)
    kset = {i for i, _ in kept}
    left_kept = tuple(i - 1 in kset for i, _ in kept)
    right_kept = tuple(i + 1 in kset for i, _ in kept)
    return ReducedInstance(kept=kept, removed_min=removed_min, left_kept=left_kept, right_kept=right_kept)


@dataclass
class SearchNode:
    """One state of the branching search.

    units are (sum, first original index, last original index) spans in
    left-to-right order; heap mirrors them as (sum, first index) entries.
    steps is the plan fragment so far, positions within the unit sequence.
    """

    units: list[tuple[float, int, int]]
    heap: list[tuple[float, int]]
    merges_left: int
    steps: tuple[int, ...]

    def child(self, i: int) -> "SearchNode":
        """New node with units i and i+1 merged; self is left untouched."""
        a = self.units[i]
        b = self.units[i + 1]
        merged = (a[0] + b[0], a[1], b[2])
        new_units = self.units[:i] + [merged] + self.units[i + 2 :]
        new_heap = [e for e in self.heap if e[1] != a[1] and e[1] != b[1]]
        heapq.heapify(new_heap)
        heapq.heappush(new_heap, (merged[0], merged[1]))
        return SearchNode(
            units=new_units,
            heap=new_heap,
            merges_left=self.merges_left - 1,
            steps=self.steps + (i,),
        )

    def check_mirror(self) -> None:
        """Heap contents must be exactly the unit (sum, start) pairs."""
        want = sorted((u[0], u[1]) for u in self.units)
        have = sorted(self.heap)
        if want != have:
            raise AssertionError(f"heap desynced from units: {have} vs {want}")
        if self.heap and self.heap[0] != have[0]:
            raise AssertionError("heap root is not the minimum")


def maxmin_merge_fpt(
    s: NumString,
    k: int,
    *,
    debug: bool = False,
    stats: dict | None = None,
) -> tuple[CutValue, MergePlan]:
    """Merge exactly k times maximizing the resulting minimum.

    Explores at most 2^(k+1) - 1 nodes (reported in stats["nodes"] when a
    dict is passed). Determinism: the minimum is the leftmost one, the
    left branch is explored first, and the first optimum found wins.
    """
    n = s.n
    if not 0 <= k <= n - 1:
        raise KOutOfRange(f"k={k} outside [0, {n - 1}]")
    if k == 0:
        if stats is not None:
            stats["nodes"] = 1
        return s.minimum, MergePlan(())
    reduced = reduce_instance(s, k)
    removed_min = reduced.removed_min
    root = SearchNode(
        units=[(v, i, i) for i, v in reduced.kept],
        heap=[(v, i) for i, v in reduced.kept],
        merges_left=k,
        steps=(),
    )
    heapq.heapify(root.heap)
    nodes = 0
    best_value = -inf
    best_units: list[tuple[float, int, int]] | None = None
    stack = [root]
    while stack:
        node = stack.pop()
        nodes += 1
        if debug:
            node.check_mirror()
        units = node.units
        min_sum, min_start = node.heap[0]
        idx = next(i for i, u in enumerate(units) if u[1] == min_start)
        left_ok = idx > 0 and units[idx - 1][2] + 1 == units[idx][1]
        right_ok = idx + 1 < len(units) and units[idx][2] + 1 == units[idx + 1][1]
        if node.merges_left == 0 or not (left_ok or right_ok):
            value = min(min_sum, removed_min)
            if value > best_value:
                best_value = value
                best_units = units
            continue
        # LIFO stack: push the right branch first so the left pops first
        if right_ok:
            stack.append(node.child(idx))
        if left_ok:
            stack.append(node.child(idx - 1))
    if stats is not None:
        stats["nodes"] = nodes
    assert best_units is not None
    # tile the surviving spans and the removed singletons back into a full
    # partition of the original string
    pieces: list[tuple[int, int]] = []
    ptr = 0
    si = 0
    while ptr < n:
        if si < len(best_units) and best_units[si][1] == ptr:
            _, a, b = best_units[si]
            pieces.append((a, b))
            ptr = b + 1
            si += 1
        else:
            pieces.append((ptr, ptr))
            ptr += 1
    pre = [0.0, *accumulate(s.values)]
    sums = [pre[b + 1] - pre[a] for a, b in pieces]
    cuts = [b + 1 for _, b in pieces[:-1]]
    # a blocked leaf may have spent fewer than k merges; pay the rest out on
    # pieces away from the minimum, which cannot change it
    while len(sums) > n - k:
        argmin = sums.index(min(sums))
        at = next(i for i in range(len(sums) - 1) if i != argmin and i + 1 != argmin)
        sums[at] += sums.pop(at + 1)
        del cuts[at]
    partition = Partition(tuple(cuts))
    vals = list(s.values)
    lo = 0
    out_value = inf
    for hi in [*partition.cuts, n]:
        piece = vals[lo]
        for t in range(lo + 1, hi):
            piece += vals[t]
        out_value = min(out_value, piece)
        lo = hi
    plan = partition_to_merges(s, partition)
    return out_value, plan
