"""Graphs derived from interval models (or built abstractly) and distance tools."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable

from .intervals import Interval, IntervalModel, ValidationError

INF = float("inf")


class Graph:
    """Simple undirected graph on vertices 0..n-1 with frozen adjacency sets."""

    __slots__ = ("n", "adj", "_adj_masks", "_closed_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValidationError("vertex count must be >= 0")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u},{v}) out of range")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in sets)
        self._adj_masks = None
        self._closed_masks = None

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def adj_masks(self) -> list[int]:
        """Open neighborhoods as bitmasks (cached)."""
        if self._adj_masks is None:
            self._adj_masks = [
                sum(1 << w for w in self.adj[v]) for v in range(self.n)
            ]
        return self._adj_masks

    def closed_masks(self) -> list[int]:
        if self._closed_masks is None:
            self._closed_masks = [
                m | (1 << v) for v, m in enumerate(self.adj_masks())
            ]
        return self._closed_masks

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


def build_graph(model: IntervalModel) -> Graph:
    """Intersection graph of a model: uv is an edge iff the intervals overlap."""
    events = []
    for iv in model.intervals:
        events.append((iv.left, 0, iv.id))
        events.append((iv.right, 1, iv.id))
    events.sort()
    active: set[int] = set()
    edges = []
    for _, kind, vid in events:
        if kind == 0:
            for w in active:
                edges.append((vid, w))
            active.add(vid)
        else:
            active.remove(vid)
    return Graph(model.n, edges)


def bfs_distances(g: Graph, source: int) -> list:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] is INF:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list]:
    """Distance matrix; INF marks pairs in different components."""
    return [bfs_distances(g, v) for v in range(g.n)]


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, ordered by minimum."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def balls(g: Graph, radius: int) -> list[dict[int, int]]:
    """For each vertex, the map {w: d(v, w)} restricted to d <= radius."""
    out = []
    for v in range(g.n):
        dist = {v: 0}
        frontier = [v]
        for d in range(1, radius + 1):
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
            if not frontier:
                break
        out.append(dist)
    return out


def power_model(model: IntervalModel, d: int) -> IntervalModel:
    """Interval model of the d-th distance power, same <_L and <_R orders.

    Every interval keeps its left endpoint and its right endpoint moves just
    past the left endpoint of the <_L-last interval within distance d; ties
    (same target interval) keep the original right-endpoint order. New right
    endpoints are placed at evenly split points of the following gap.
    """
    if d < 2:
        raise ValidationError("power_model requires d >= 2")
    g = build_graph(model)
    reach = balls(g, d)
    lefts = [model.left(v) for v in range(model.n)]
    lorder = model.left_order()
    next_left = {}
    for i, v in enumerate(lorder):
        next_left[v] = lefts[lorder[i + 1]] if i + 1 < model.n else None

    # target u_x = <_L-last interval within distance d of x
    target = []
    for x in range(model.n):
        target.append(max(reach[x], key=lambda w: lefts[w]))

    groups: dict[int, list[int]] = {}
    for x in range(model.n):
        groups.setdefault(target[x], []).append(x)

    new_right: dict[int, Fraction] = {}
    for t, members in groups.items():
        members.sort(key=lambda x: model.right(x))
        lo = lefts[t]
        hi = next_left[t]
        if hi is None:
            for j, x in enumerate(members):
                new_right[x] = lo + j + 1
        else:
            step = Fraction(hi - lo, len(members) + 1)
            for j, x in enumerate(members):
                new_right[x] = lo + step * (j + 1)

    return IntervalModel(
        Interval(v, lefts[v], new_right[v]) for v in range(model.n)
    )
