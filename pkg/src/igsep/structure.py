"""Leftmost/rightmost greedy paths and the strict left/right separation
calculus on interval models.

The rightmost path of u repeatedly steps to the neighbor with the largest
right endpoint; it is a shortest path to the (component's) <_R-maximum
interval. A vertex x separates a pair strictly from the right when its
interval starts after both right endpoints of the pair, so x is not a
neighbor of either member; mirrored on the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, build_graph
from .intervals import IntervalModel


@dataclass(frozen=True)
class DirectionalPath:
    origin: int
    direction: str  # "L" or "R"
    vertices: tuple[int, ...]


def rightmost_step_table(model: IntervalModel, g: Optional[Graph] = None) -> list:
    """For each u, its rightmost step, or None when u is the <_R-maximum of
    its component (including isolated vertices)."""
    if g is None:
        g = build_graph(model)
    table = []
    for u in range(model.n):
        best = None
        for w in g.adj[u]:
            if best is None or model.right(w) > model.right(best):
                best = w
        if best is None or model.right(best) < model.right(u):
            table.append(None)
        else:
            table.append(best)
    return table


def leftmost_step_table(model: IntervalModel, g: Optional[Graph] = None) -> list:
    if g is None:
        g = build_graph(model)
    table = []
    for u in range(model.n):
        best = None
        for w in g.adj[u]:
            if best is None or model.left(w) < model.left(best):
                best = w
        if best is None or model.left(best) > model.left(u):
            table.append(None)
        else:
            table.append(best)
    return table


def rightmost_step(model: IntervalModel, u: int, g: Optional[Graph] = None):
    return rightmost_step_table(model, g)[u]


def leftmost_step(model: IntervalModel, u: int, g: Optional[Graph] = None):
    return leftmost_step_table(model, g)[u]


def rightmost_path(model: IntervalModel, u: int, g: Optional[Graph] = None) -> DirectionalPath:
    table = rightmost_step_table(model, g)
    return _walk(u, "R", table)


def leftmost_path(model: IntervalModel, u: int, g: Optional[Graph] = None) -> DirectionalPath:
    table = leftmost_step_table(model, g)
    return _walk(u, "L", table)


def _walk(u: int, direction: str, table) -> DirectionalPath:
    verts = [u]
    cur = u
    while table[cur] is not None:
        cur = table[cur]
        verts.append(cur)
    return DirectionalPath(u, direction, tuple(verts))


def separates_strictly(model: IntervalModel, dists, u: int, v: int, x: int):
    """"right"/"left" when x separates u,v strictly from that side, else None.

    Strict separation requires x to be disjoint from both pair members on the
    given side; a separating neighbor of u or v yields None.
    """
    if dists[x][u] == dists[x][v]:
        return None
    if model.left(x) > max(model.right(u), model.right(v)):
        return "right"
    if model.right(x) < min(model.left(u), model.left(v)):
        return "left"
    return None
