"""Exhaustive reference solvers for desk-size instances, plus a portable
instance generator.

These enumerate every cut subset outright, so they are the ground truth the
fast algorithms are checked against. They refuse instances above an explicit
budget instead of running unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, combinations

from .core import (
    CutValue,
    Infeasible,
    NumString,
    PointSet,
    QOutOfRange,
    TooFewPoints,
    TooLarge,
)

__all__ = [
    "OracleBudget",
    "DEFAULT_BUDGET",
    "oracle_max_b_partition",
    "oracle_maxmin_cut",
    "oracle_diversity",
    "gen_instance",
]


@dataclass(frozen=True)
class OracleBudget:
    """Hard ceilings for exhaustive enumeration."""

    max_n: int = 14
    max_subsets: int = 1 << 20


DEFAULT_BUDGET = OracleBudget()


def _check_n(n: int, budget: OracleBudget) -> None:
    if n > budget.max_n:
        raise TooLarge(f"exhaustive search capped at n={budget.max_n}, got n={n}")


def oracle_max_b_partition(s: NumString, b: float, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Most pieces over all 2^(n-1) cut subsets with every piece sum >= b.

    Raises Infeasible when even the whole string sums below b.
    """
    n = s.n
    _check_n(n, budget)
    pre = [0.0, *accumulate(s.values)]
    total = pre[n]
    best = 0
    for mask in range(1 << (n - 1)):
        lo = 0
        count = 1
        ok = True
        mm = mask
        while mm:
            cut = (mm & -mm).bit_length()  # position of the lowest set bit, 1-based
            if pre[cut] - pre[lo] < b:
                ok = False
                break
            lo = cut
            count += 1
            mm &= mm - 1
        if ok and total - pre[lo] >= b and count > best:
            best = count
    if best == 0:
        raise Infeasible("no solution")
    return best


def oracle_maxmin_cut(s: NumString, q: int, budget: OracleBudget = DEFAULT_BUDGET) -> CutValue:
    """Best minimum piece sum over all partitions into exactly q pieces."""
    n = s.n
    _check_n(n, budget)
    if not 1 <= q <= n:
        raise QOutOfRange(f"q={q} outside [1, {n}]")
    pre = [0.0, *accumulate(s.values)]
    best = -1.0
    for cuts in combinations(range(1, n), q - 1):
        bounds = (0, *cuts, n)
        worst = min(pre[hi] - pre[lo] for lo, hi in zip(bounds, bounds[1:]))
        if worst > best:
            best = worst
    return best


def oracle_diversity(p: PointSet, j: int, budget: OracleBudget = DEFAULT_BUDGET) -> CutValue:
    """Max over j-subsets of the minimum pairwise distance between chosen points.

    Points are sorted, so only adjacent gaps within a subset matter.
    """
    pts = p.points
    m = len(pts)
    _check_n(m, budget)
    if j < 2 or m < j:
        raise TooFewPoints(f"need 2 <= j <= {m}, got j={j}")
    best = -1.0
    for sub in combinations(pts, j):
        worst = min(b - a for a, b in zip(sub, sub[1:]))
        if worst > best:
            best = worst
    return best


_MASK64 = (1 << 64) - 1


def gen_instance(seed: int, n: int, value_max: int) -> NumString:
    """Deterministic random instance with integer values in [1, value_max].

    Implements the splitmix64 mix directly so the same seed yields the same
    string on every platform and interpreter: each draw advances a 64-bit
    state by the golden-ratio constant, scrambles it with two xor-multiply
    rounds, and reduces the result mod value_max.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if value_max < 1:
        raise ValueError(f"value_max must be >= 1, got {value_max}")
    state = seed & _MASK64
    out = []
    append = out.append
    for _ in range(n):
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        append(float(z % value_max + 1))
    return NumString(tuple(out))
