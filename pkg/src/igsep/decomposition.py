"""Nice path decompositions of interval models by endpoint sweep.

Sweeping the sorted endpoints left to right, a left endpoint introduces its
interval and a right endpoint forgets it, so bags are exactly the intervals
stabbed by the sweep point: every bag is a clique, vertices are introduced
in <_L order and forgotten in <_R order, and the width is the clique number
minus one. The final forget empties the bag and doubles as the root marker.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph
from .intervals import IntervalModel, ValidationError

LEAF = "leaf"
INTRODUCE = "introduce"
FORGET = "forget"
ROOT = "root"


@dataclass(frozen=True)
class Event:
    kind: str
    vertex: int
    bag: frozenset
    point: object  # sweep coordinate on the real line


class PathDecomposition:
    __slots__ = ("events",)

    def __init__(self, events: Iterable[Event]):
        self.events = tuple(events)

    @property
    def width(self) -> int:
        return max(len(e.bag) for e in self.events) - 1

    def bags(self) -> list[frozenset]:
        return [e.bag for e in self.events]

    def __len__(self):
        return len(self.events)


def build_path_decomposition(model: IntervalModel) -> PathDecomposition:
    if model.n < 1:
        raise ValidationError("cannot decompose an empty model")
    points = []
    for iv in model.intervals:
        points.append((iv.left, 0, iv.id))
        points.append((iv.right, 1, iv.id))
    points.sort()
    events = []
    bag: set[int] = set()
    n_forgotten = 0
    for coord, kind, vid in points:
        if kind == 0:
            bag.add(vid)
            ev_kind = LEAF if not events else INTRODUCE
        else:
            bag.remove(vid)
            n_forgotten += 1
            ev_kind = ROOT if n_forgotten == model.n else FORGET
        events.append(Event(ev_kind, vid, frozenset(bag), coord))
    return PathDecomposition(events)


def max_stabbing(model: IntervalModel) -> int:
    """Largest number of intervals containing a common point (= clique number)."""
    points = []
    for iv in model.intervals:
        points.append((iv.left, 0))
        points.append((iv.right, 1))
    points.sort()
    depth = best = 0
    for _, kind in points:
        depth += 1 if kind == 0 else -1
        best = max(best, depth)
    return best


def bag_distance_pairs(g: Graph, decomposition: PathDecomposition, t: int, dists=None):
    """Unordered pairs of the t-th bag at distance <= 2 in g."""
    from .graphs import all_pairs_distances

    if dists is None:
        dists = all_pairs_distances(g)
    bag = sorted(decomposition.events[t].bag)
    return {
        (u, v)
        for i, u in enumerate(bag)
        for v in bag[i + 1 :]
        if dists[u][v] <= 2
    }


def dump_events(decomposition: PathDecomposition) -> str:
    """One line per event: I/F marker, vertex, then the bag contents."""
    lines = []
    for e in decomposition.events:
        marker = "I" if e.kind in (LEAF, INTRODUCE) else "F"
        line = f"{marker} {e.vertex}"
        if e.bag:
            line += " | " + " ".join(str(v) for v in sorted(e.bag))
        lines.append(line)
    return "\n".join(lines) + "\n"
