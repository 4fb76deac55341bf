"""Strings of positive numbers: partitions, merge plans, prefix-sum points.

A string here is a sequence of strictly positive finite numbers. Merging
replaces two adjacent numbers by their sum; cutting splits the string into
contiguous pieces. The two views are interchangeable: a partition into t
pieces corresponds to a plan of n - t merges, and the pieces of a partition
correspond to gaps between selected prefix-sum points. Everything in this
module is a pure function over immutable values, safe to share across
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate, pairwise

__all__ = [
    "CutValue",
    "MergeCutError",
    "EmptyString",
    "NonPositiveValue",
    "InvalidPartition",
    "InvalidPlan",
    "Infeasible",
    "NonIntegerInput",
    "KOutOfRange",
    "QOutOfRange",
    "TooFewPoints",
    "DuplicatePoints",
    "TooShort",
    "TooLarge",
    "NumString",
    "Partition",
    "MergePlan",
    "PointSet",
    "validate_string",
    "to_points",
    "partition_to_merges",
    "merges_to_partition",
    "apply_merges",
    "piece_sums",
    "format_number",
]

# The optimum of a max-min problem, in the same units as the input values.
CutValue = float


class MergeCutError(Exception):
    """Base class for every domain error raised by this package."""


class EmptyString(MergeCutError):
    """The input string has no values."""


class NonPositiveValue(MergeCutError):
    """A value is zero, negative, or not finite."""

    def __init__(self, index: int, value: float):
        super().__init__(f"value at index {index} must be a positive finite number, got {value!r}")
        self.index = index
        self.value = value


class InvalidPartition(MergeCutError):
    """Cut positions are out of range, unordered, or duplicated."""


class InvalidPlan(MergeCutError):
    """A merge step does not fit the string state it is applied to."""


class Infeasible(MergeCutError):
    """No solution exists (the total sum is below the threshold)."""


class NonIntegerInput(MergeCutError):
    """An integer-only algorithm was given non-integer values."""


class KOutOfRange(MergeCutError):
    """The merge count k is outside [0, n - 1] (or [1, n - 1] where stated)."""


class QOutOfRange(MergeCutError):
    """The piece count q is outside [1, n]."""


class TooFewPoints(MergeCutError):
    """Fewer points than the requested subset size."""


class DuplicatePoints(MergeCutError):
    """Point values must be strictly increasing."""


class TooShort(MergeCutError):
    """The string is too short for the requested number of pieces."""


class TooLarge(MergeCutError):
    """The instance exceeds the exhaustive-search budget."""


@dataclass(frozen=True)
class NumString:
    """Immutable sequence of strictly positive finite numbers."""

    values: tuple[float, ...]

    def __post_init__(self):
        vals = self.values
        if not isinstance(vals, tuple) or any(type(v) is not float for v in vals):
            object.__setattr__(self, "values", tuple(float(v) for v in vals))
            vals = self.values
        if len(vals) == 0:
            raise EmptyString("a number string needs at least one value")
        for i, v in enumerate(vals):
            if not (math.isfinite(v) and v > 0.0):
                raise NonPositiveValue(i, v)

    @property
    def n(self) -> int:
        return len(self.values)

    @cached_property
    def total(self) -> float:
        return float(sum(self.values))

    @cached_property
    def minimum(self) -> float:
        return min(self.values)

    def reversed(self) -> "NumString":
        return NumString(self.values[::-1])


def validate_string(values) -> NumString:
    """Check raw numbers and wrap them as a NumString.

    Raises EmptyString for an empty input and NonPositiveValue (with the
    offending index) for anything that is not a positive finite number.
    """
    return NumString(tuple(float(v) for v in values))


@dataclass(frozen=True)
class Partition:
    """Interior cut positions of a string; cut i separates values[:i] from values[i:].

    Cuts are strictly increasing integers, each at least 1. Whether they fit
    a particular string (every cut below its length) is checked by the
    operations that take both.
    """

    cuts: tuple[int, ...]

    def __post_init__(self):
        prev = 0
        for c in self.cuts:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidPartition(f"cut positions must be ints, got {c!r}")
            if c <= prev:
                raise InvalidPartition(f"cuts must be strictly increasing and >= 1, got {self.cuts}")
            prev = c

    @property
    def piece_count(self) -> int:
        return len(self.cuts) + 1


@dataclass(frozen=True)
class MergePlan:
    """Sequence of merge steps; step i merges current elements i and i+1.

    Steps are evaluated in order against the string as already shortened by
    the earlier steps, so the same index may legally appear several times.
    """

    steps: tuple[int, ...]

    def __post_init__(self):
        for i in self.steps:
            if not isinstance(i, int) or isinstance(i, bool) or i < 0:
                raise InvalidPlan(f"merge steps must be nonnegative ints, got {i!r}")

    @property
    def merge_count(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class PointSet:
    """Strictly increasing point values on a line."""

    points: tuple[float, ...]

    def __post_init__(self):
        if len(self.points) == 0:
            raise TooFewPoints("a point set needs at least one point")
        for a, b in pairwise(self.points):
            if b == a:
                raise DuplicatePoints(f"duplicate point value {a!r}")
            if b < a:
                raise ValueError(f"points must be strictly increasing, got {a!r} before {b!r}")


def to_points(s: NumString) -> PointSet:
    """Prefix-sum embedding of a string: point i is the sum of the first i values.

    The n+1 points are strictly increasing because every value is positive,
    and the gaps between consecutive selected points are exactly the piece
    sums of the partition that cuts at the selected interior positions.
    """
    return PointSet((0.0, *accumulate(s.values)))


def _check_partition(s: NumString, p: Partition) -> None:
    if p.cuts and p.cuts[-1] >= s.n:
        raise InvalidPartition(f"cut {p.cuts[-1]} out of range for a string of length {s.n}")


def piece_sums(s: NumString, p: Partition) -> list[float]:
    """Sum of each piece of the partition, left to right."""
    _check_partition(s, p)
    pre = [0.0, *accumulate(s.values)]
    bounds = (0, *p.cuts, s.n)
    return [pre[b] - pre[a] for a, b in pairwise(bounds)]


def partition_to_merges(s: NumString, p: Partition) -> MergePlan:
    """Canonical plan collapsing each piece to a single number, left to right.

    Once the pieces before piece i are collapsed, piece i starts at position
    i of the current string, so a piece of length L contributes L - 1 steps
    at that fixed position.
    """
    _check_partition(s, p)
    steps: list[int] = []
    bounds = (0, *p.cuts, s.n)
    for i, (a, b) in enumerate(pairwise(bounds)):
        steps.extend([i] * (b - a - 1))
    return MergePlan(tuple(steps))


def merges_to_partition(s: NumString, m: MergePlan) -> Partition:
    """Partition whose pieces are the groups of originals merged by the plan.

    Accepts any valid merge order, not just the canonical one; the resulting
    groups are the same whenever the plan merges the same original spans.
    """
    starts = list(range(s.n))  # original start index of each current element
    for step in m.steps:
        if not 0 <= step < len(starts) - 1:
            raise InvalidPlan(f"step {step} out of range for current length {len(starts)}")
        del starts[step + 1]
    return Partition(tuple(starts[1:]))


def apply_merges(s: NumString, m: MergePlan) -> NumString:
    """Run the plan and return the merged string.

    The total sum is preserved up to floating accumulation, and any single
    merge leaves the minimum value unchanged or larger (the merged value
    exceeds both operands).
    """
    vals = list(s.values)
    for step in m.steps:
        if not 0 <= step < len(vals) - 1:
            raise InvalidPlan(f"step {step} out of range for current length {len(vals)}")
        vals[step] += vals.pop(step + 1)
    return NumString(tuple(vals))


def format_number(v: float) -> str:
    """Shortest decimal form that round-trips; integral values print without a dot."""
    f = float(v)
    if f.is_integer() and abs(f) < 2**53:
        return str(int(f))
    return repr(f)
