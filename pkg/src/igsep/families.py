"""Named fixture families: paths and cliques as interval models, cycles as
abstract graphs, and a chordal family on which distance-2 resolving sets
are strictly weaker than resolving sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import Graph
from .intervals import IntervalModel, ValidationError, model_from_pairs

FAMILIES = ("path", "clique", "cycle-graph", "chordal-fig7")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    size: int


@dataclass(frozen=True)
class ChordalWitnessFamily:
    """Chordal graph plus the designated black vertex pair: the pair is a
    distance-2 resolving set but not a resolving set (the two apex vertices
    are equidistant from both black vertices)."""

    graph: Graph
    black: frozenset


# Frozen kernel adjacency. Vertex roles: 0 = left apex (pendant on the hub),
# 1 = lower attachment, 2 = hub, 3 = upper attachment, 4/5 = the triangle
# that carries 6 = right apex.
FIG7_KERNEL_EDGES = (
    (0, 2),
    (1, 2),
    (1, 4),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 5),
    (4, 5),
    (4, 6),
    (5, 6),
)
FIG7_KERNEL_ORDER = 7
FIG7_APEXES = (0, 6)


def path_model(k: int) -> IntervalModel:
    if k < 1:
        raise ValidationError("path size must be >= 1")
    return model_from_pairs([(3 * i, 3 * i + 4) for i in range(k)])


def clique_model(k: int) -> IntervalModel:
    if k < 1:
        raise ValidationError("clique size must be >= 1")
    return model_from_pairs([(i, 2 * k + i) for i in range(k)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValidationError("cycle size must be >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def chordal_fig7(t: int) -> ChordalWitnessFamily:
    """Kernel plus two pendant paths of t edges whose black end vertices form
    the witness pair; valid for t >= 2."""
    if t < 2:
        raise ValidationError("pendant length must be >= 2")
    edges = list(FIG7_KERNEL_EDGES)
    nxt = FIG7_KERNEL_ORDER
    blacks = []
    for attach in (1, 3):
        prev = attach
        for _ in range(t):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        blacks.append(prev)
    return ChordalWitnessFamily(Graph(nxt, edges), frozenset(blacks))


def make_family(spec: FamilySpec) -> Union[IntervalModel, Graph, ChordalWitnessFamily]:
    if spec.family == "path":
        return path_model(spec.size)
    if spec.family == "clique":
        return clique_model(spec.size)
    if spec.family == "cycle-graph":
        return cycle_graph(spec.size)
    if spec.family == "chordal-fig7":
        return chordal_fig7(spec.size)
    raise ValidationError(f"unknown family {spec.family!r}")
