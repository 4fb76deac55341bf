"""Greedy threshold partitioning and the integer binary search built on it.

Cutting off the shortest prefix that reaches b, over and over, produces a
partition with the maximum possible number of pieces that all reach b; any
leftover below b joins the last piece. The fewest merges that push every
value to b and the piece-maximal partition are two encodings of the same
answer: merges = n - pieces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CutValue,
    Infeasible,
    KOutOfRange,
    MergePlan,
    NonIntegerInput,
    NumString,
    Partition,
    partition_to_merges,
    piece_sums,
)

__all__ = [
    "BPartitionResult",
    "minimal_b_prefix",
    "optimal_b_partition",
    "fewest_merges",
    "maxmin_merge_by_search",
]


@dataclass(frozen=True)
class BPartitionResult:
    """Piece-maximal partition at threshold b, plus bookkeeping.

    n_below counts input values strictly below b; the merge count always
    lies between ceil(n_below / 2) and n_below.
    """

    partition: Partition
    piece_count: int
    merges: int
    threshold_b: float
    n_below: int


def minimal_b_prefix(s: NumString, b: float, start: int = 0) -> int | None:
    """Smallest end > start such that values[start:end] sums to at least b.

    Returns None when the whole suffix stays below b.
    """
    if b <= 0:
        raise ValueError(f"threshold must be positive, got {b}")
    if not 0 <= start < s.n:
        raise IndexError(f"start {start} out of range for length {s.n}")
    acc = 0.0
    values = s.values
    for i in range(start, len(values)):
        acc += values[i]
        if acc >= b:
            return i + 1
    return None


def optimal_b_partition(s: NumString, b: float) -> BPartitionResult:
    """Partition with the most pieces whose sums all reach b.

    One left-to-right scan: cut whenever the running sum reaches b, then fold
    a trailing leftover below b into the last piece. Scanning right-to-left
    yields the same piece count. Raises Infeasible ("no solution") when the
    total sum is below b.
    """
    if b <= 0:
        raise ValueError(f"threshold must be positive, got {b}")
    ends: list[int] = []
    append = ends.append
    acc = 0.0
    n_below = 0
    i = 0
    for v in s.values:
        i += 1
        if v < b:
            n_below += 1
        acc += v
        if acc >= b:
            append(i)
            acc = 0.0
    if not ends:
        raise Infeasible(f"no solution: total {s.total} is below {b}")
    pieces = len(ends)
    return BPartitionResult(
        partition=Partition(tuple(ends[:-1])),
        piece_count=pieces,
        merges=s.n - pieces,
        threshold_b=float(b),
        n_below=n_below,
    )


def fewest_merges(s: NumString, b: float) -> MergePlan:
    """Shortest plan after which every remaining value is at least b."""
    return partition_to_merges(s, optimal_b_partition(s, b).partition)


def _piece_count(values: tuple[float, ...], b: int) -> int:
    count = 0
    acc = 0.0
    for v in values:
        acc += v
        if acc >= b:
            count += 1
            acc = 0.0
    return count


def maxmin_merge_by_search(s: NumString, k: int) -> tuple[CutValue, MergePlan]:
    """Best k-merge minimum for integer strings, by binary search on the threshold.

    The piece count of the greedy partition is nonincreasing in b, so the
    optimum is the largest integer b in [1, total] whose greedy partition
    still has at least n - k pieces. That argument needs integer optima and
    is invalid for arbitrary reals, hence NonIntegerInput. When the greedy
    witness has more than n - k pieces, neighbors are absorbed into the
    piece with the largest sum (ties leftmost) until exactly k merges remain;
    absorption only grows sums, so the minimum stays at the optimum.
    """
    values = s.values
    if any(not v.is_integer() for v in values):
        raise NonIntegerInput("binary search on the answer needs integer values")
    n = s.n
    if not 0 <= k <= n - 1:
        raise KOutOfRange(f"k={k} outside [0, {n - 1}]")
    target = n - k
    lo, hi = 1, int(s.total)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _piece_count(values, mid) >= target:
            lo = mid
        else:
            hi = mid - 1
    best_b = lo  # b=1 is always feasible for integer values
    part = optimal_b_partition(s, best_b).partition
    cuts = list(part.cuts)
    sums = piece_sums(s, part)
    while len(sums) > target:
        j = sums.index(max(sums))
        if j < len(sums) - 1:
            sums[j] += sums.pop(j + 1)
            del cuts[j]
        else:
            sums[j - 1] += sums.pop(j)
            del cuts[j - 1]
    plan = partition_to_merges(s, Partition(tuple(cuts)))
    return float(best_b), plan
