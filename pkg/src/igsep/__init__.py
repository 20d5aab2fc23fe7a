"""Distinguishing-set problems on interval graphs.

Exact solvers and verifiers for metric dimension, locating-dominating sets,
identifying codes and open locating-dominating sets; a fixed-parameter
dynamic program for metric dimension over path decompositions of the fourth
distance power; and generators for hard instances built from 3-dimensional
matching.
"""

from .codes import (
    ProblemKind,
    SearchResult,
    brute_force_min,
    brute_force_min_distance2,
    first_violation,
    has_open_twins,
    has_twins,
    is_distance2_resolving,
    is_identifying,
    is_locating_dominating,
    is_open_locating_dominating,
    is_resolving,
)
from .decomposition import PathDecomposition, build_path_decomposition
from .fpt import FptResult, bag_size_bound, fpt_metric_dimension
from .graphs import (
    INF,
    Graph,
    all_pairs_distances,
    build_graph,
    connected_components,
    power_model,
)
from .intervals import Interval, IntervalModel, ValidationError, model_from_pairs, random_model
from .reductions import (
    ID_GADGET,
    LD_GADGET,
    OLD_GADGET,
    DominatingGadget,
    ReductionOutput,
    ThreeDMInstance,
    audit_reduction,
    build_reduction,
    build_transmitter_host,
    f1,
    f2,
    f3,
    gadget_for,
    standard_solution,
)

__all__ = [
    "INF",
    "Graph",
    "Interval",
    "IntervalModel",
    "ProblemKind",
    "SearchResult",
    "FptResult",
    "ValidationError",
    "DominatingGadget",
    "ReductionOutput",
    "ThreeDMInstance",
    "PathDecomposition",
    "LD_GADGET",
    "ID_GADGET",
    "OLD_GADGET",
    "all_pairs_distances",
    "audit_reduction",
    "bag_size_bound",
    "brute_force_min",
    "brute_force_min_distance2",
    "build_graph",
    "build_path_decomposition",
    "build_reduction",
    "build_transmitter_host",
    "connected_components",
    "f1",
    "f2",
    "f3",
    "first_violation",
    "fpt_metric_dimension",
    "gadget_for",
    "has_open_twins",
    "has_twins",
    "is_distance2_resolving",
    "is_identifying",
    "is_locating_dominating",
    "is_open_locating_dominating",
    "is_resolving",
    "model_from_pairs",
    "power_model",
    "random_model",
    "standard_solution",
]
