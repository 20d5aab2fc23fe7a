"""Interval models: the geometric source of truth for everything in this package.

An interval model is an ordered list of closed intervals with pairwise
distinct endpoint coordinates. Coordinates are exact (int or Fraction),
never floats: the hard-instance constructions rely on exact nesting and
strict inequalities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Coord = Union[int, Fraction]

RANDOM_STYLES = ("uniform-endpoints", "unit-length", "long-thin")


class ValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Interval:
    """A closed interval [left, right] carrying a dense integer vertex id."""

    id: int
    left: Coord
    right: Coord

    def __post_init__(self):
        if not self.left < self.right:
            raise ValidationError(
                f"interval {self.id}: left {self.left!r} must be < right {self.right!r}"
            )


class IntervalModel:
    """An immutable interval model with distinct endpoints.

    Models with tied endpoints are repaired by an order-preserving
    perturbation pass (all coordinates are reassigned their rank, with ties
    broken so that closed-interval intersections at touching points are
    preserved: left endpoints sort before right endpoints at an equal
    coordinate, then by id). Pass ``repair=False`` to reject ties instead.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Interval], repair: bool = True):
        ivs = sorted(intervals, key=lambda iv: iv.id)
        if not ivs:
            raise ValidationError("empty interval model")
        if [iv.id for iv in ivs] != list(range(len(ivs))):
            raise ValidationError("interval ids must be exactly 0..n-1")
        coords = [iv.left for iv in ivs] + [iv.right for iv in ivs]
        if len(set(coords)) != len(coords):
            if not repair:
                seen = set()
                for c in coords:
                    if c in seen:
                        raise ValidationError(f"duplicate endpoint coordinate {c}")
                    seen.add(c)
            ivs = _repair_ties(ivs)
        object.__setattr__(self, "intervals", tuple(ivs))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def left(self, v: int) -> Coord:
        return self.intervals[v].left

    def right(self, v: int) -> Coord:
        return self.intervals[v].right

    def left_order(self) -> list[int]:
        """Vertices sorted by left endpoint (the <_L order)."""
        return sorted(range(self.n), key=lambda v: self.intervals[v].left)

    def right_order(self) -> list[int]:
        """Vertices sorted by right endpoint (the <_R order)."""
        return sorted(range(self.n), key=lambda v: self.intervals[v].right)

    def normalized(self) -> "IntervalModel":
        """Equivalent model with integer coordinates 0..2n-1 (order-preserving)."""
        return IntervalModel(_rank_intervals(self.intervals))

    def __eq__(self, other):
        return isinstance(other, IntervalModel) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self):
        return f"IntervalModel(n={self.n})"


def model_from_pairs(pairs: Sequence[tuple[Coord, Coord]], repair: bool = True) -> IntervalModel:
    """Build a model from (left, right) pairs, ids assigned by position."""
    return IntervalModel(
        (Interval(i, l, r) for i, (l, r) in enumerate(pairs)), repair=repair
    )


def _rank_intervals(ivs: Sequence[Interval]) -> list[Interval]:
    # left endpoints before right endpoints at equal coordinates, then by id:
    # touching closed intervals keep their intersection after reassignment.
    points = []
    for iv in ivs:
        points.append((iv.left, 0, iv.id))
        points.append((iv.right, 1, iv.id))
    points.sort()
    lefts: dict[int, int] = {}
    rights: dict[int, int] = {}
    for rank, (_, kind, vid) in enumerate(points):
        (lefts if kind == 0 else rights)[vid] = rank
    return [Interval(iv.id, lefts[iv.id], rights[iv.id]) for iv in ivs]


def _repair_ties(ivs: Sequence[Interval]) -> list[Interval]:
    return _rank_intervals(ivs)


def random_model(
    n: int, seed: int, style: str = "uniform-endpoints", window: int = 4
) -> IntervalModel:
    """Deterministic pseudo-random interval model.

    Styles:
      uniform-endpoints: 2n distinct coordinates paired at random.
      unit-length: all intervals share one length, random placement.
      long-thin: interval i spans a fixed band of ``window`` successive
        slots with jittered endpoints, which caps the clique number of the
        fourth distance power independently of n.
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    if style not in RANDOM_STYLES:
        raise ValidationError(f"unknown style {style!r}")
    rng = random.Random(f"{seed}:{style}:{n}:{window}")
    if style == "uniform-endpoints":
        coords = rng.sample(range(4 * n), 2 * n)
        pairs = []
        for i in range(n):
            a, b = coords[2 * i], coords[2 * i + 1]
            pairs.append((min(a, b), max(a, b)))
        return model_from_pairs(pairs)
    if style == "unit-length":
        span = 2 * window + 1  # odd length, even starts: endpoints never collide
        lefts = rng.sample(range(3 * n), n)
        return model_from_pairs([(2 * a, 2 * a + span) for a in lefts])
    # long-thin: left in slot 2i, right in slot 2(i+window)+1, jitter inside
    stride = 8
    pairs = []
    for i in range(n):
        left = 2 * i * stride + rng.randrange(1, stride)
        right = (2 * (i + window) + 1) * stride + rng.randrange(1, stride)
        pairs.append((left, right))
    return model_from_pairs(pairs)
