import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    er_graph,
    naive_distance2_resolving,
    naive_id,
    naive_ld,
    naive_old,
    naive_resolving,
    path_graph,
)
from igsep.codes import (
    ProblemKind,
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
from igsep.graphs import Graph, build_graph

K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# --- resolving sets ---------------------------------------------------------


def test_path_endpoint_resolves():
    assert is_resolving(path_graph(5), {0})


def test_triangle_single_vertex_does_not_resolve():
    assert not is_resolving(K3, {0})


def test_c4_two_adjacent_vertices_resolve():
    # oracle first: distance vectors to {0, 1} are pairwise distinct
    assert naive_resolving(C4, {0, 1})
    assert is_resolving(C4, {0, 1})


def test_resolving_with_infinite_distances():
    g = Graph(4, [(0, 1), (2, 3)])
    assert is_resolving(g, {0, 2})
    assert not is_resolving(g, {0})  # 2 and 3 both at distance INF from 0


# --- locating-dominating ----------------------------------------------------


def test_p4_outer_pair_is_ld():
    assert is_locating_dominating(path_graph(4), {0, 3})


def test_p4_single_endpoint_is_not_ld():
    assert not is_locating_dominating(path_graph(4), {0})
    assert first_violation(path_graph(4), ProblemKind.LD, {0}) == ("undominated", 2)


def test_whole_vertex_set_is_ld():
    for seed in range(5):
        g = er_graph(7, 0.3, seed)
        assert is_locating_dominating(g, set(range(7)))


# --- identifying codes ------------------------------------------------------


def test_p5_standard_identifying_code():
    assert is_identifying(path_graph(5), {0, 2, 4})


def test_twins_break_identification():
    g = Graph(2, [(0, 1)])
    assert has_twins(g)
    assert not is_identifying(g, {0, 1})


def test_p5_x1_x3_x4_frozen_by_enumeration():
    g = path_graph(5)
    s = {0, 2, 3}
    assert naive_id(g, s) is False  # N[2] and N[3] trace identically
    assert is_identifying(g, s) is False


# --- open locating-dominating -----------------------------------------------


def test_p6_middle_standard_is_old():
    assert is_open_locating_dominating(path_graph(6), {1, 2, 3, 4})


def test_p6_end_heavy_set_is_not_old():
    # {x1,x3,x4,x6} leaves both end vertices without a chosen neighbor
    g = path_graph(6)
    assert naive_old(g, {0, 2, 3, 5}) is False
    assert not is_open_locating_dominating(g, {0, 2, 3, 5})
    assert first_violation(g, ProblemKind.OLD, {0, 2, 3, 5}) == ("undominated", 0)


def test_isolated_vertex_blocks_old():
    g = Graph(3, [(0, 1)])
    assert not is_open_locating_dominating(g, {0, 1, 2})


def test_c4_open_twins_block_old():
    assert has_open_twins(C4)
    for size in range(5):
        for s in itertools.combinations(range(4), size):
            assert not is_open_locating_dominating(C4, s)


# --- twins ------------------------------------------------------------------


def test_twin_detection():
    assert has_twins(Graph(2, [(0, 1)]))
    assert has_open_twins(path_graph(3))
    assert not has_twins(path_graph(4))
    assert not has_open_twins(path_graph(4))


# --- distance-2 resolving ---------------------------------------------------


def test_resolving_implies_distance2_resolving():
    for seed in range(8):
        g = er_graph(8, 0.35, seed)
        for s in ({0}, {0, 3}, {1, 5, 6}):
            if is_resolving(g, s):
                assert is_distance2_resolving(g, s)


def test_distance2_agrees_with_naive():
    for seed in range(8):
        g = er_graph(8, 0.3, seed)
        for s in ({0, 1}, {2, 6}, {0, 4, 7}):
            assert is_distance2_resolving(g, s) == naive_distance2_resolving(g, s)


# --- brute force ------------------------------------------------------------


def test_brute_force_gadget_constants():
    assert brute_force_min(path_graph(4), ProblemKind.LD).size == 2
    assert brute_force_min(path_graph(5), ProblemKind.ID).size == 3
    assert brute_force_min(path_graph(6), ProblemKind.OLD).size == 4


def test_brute_force_clique_md():
    for n in (3, 4, 5):
        res = brute_force_min(complete(n), ProblemKind.MD)
        assert res.size == n - 1


def test_brute_force_budget_vs_infeasible():
    r = brute_force_min(path_graph(6), ProblemKind.OLD, k_max=3)
    assert not r.found and r.reason == "budget-exceeded"
    r = brute_force_min(Graph(2, [(0, 1)]), ProblemKind.ID)
    assert not r.found and r.reason == "twins"
    r = brute_force_min(C4, ProblemKind.OLD)
    assert not r.found and r.reason == "open-twins"
    r = brute_force_min(Graph(1, []), ProblemKind.OLD)
    assert not r.found and r.reason == "isolated-vertex"


def test_brute_force_lexicographic_witness():
    res = brute_force_min(path_graph(5), ProblemKind.MD)
    assert res.size == 1 and res.witness == {0}


def test_brute_force_k_max_validation():
    with pytest.raises(ValueError):
        brute_force_min(path_graph(3), ProblemKind.MD, k_max=9)


def test_brute_force_threads_deterministic():
    for seed in range(4):
        g = er_graph(9, 0.3, seed)
        a = brute_force_min(g, ProblemKind.LD, threads=1)
        b = brute_force_min(g, ProblemKind.LD, threads=3)
        assert (a.size, a.witness, a.reason) == (b.size, b.witness, b.reason)


def test_brute_force_witness_passes_predicates():
    preds = {
        ProblemKind.MD: is_resolving,
        ProblemKind.LD: is_locating_dominating,
        ProblemKind.ID: is_identifying,
        ProblemKind.OLD: is_open_locating_dominating,
    }
    for seed in range(6):
        g = er_graph(8, 0.4, seed)
        for kind, pred in preds.items():
            res = brute_force_min(g, kind)
            if res.found:
                assert pred(g, res.witness)
                # minimality: nothing one smaller works
                if res.size:
                    smaller = brute_force_min(g, kind, k_max=res.size - 1)
                    assert not smaller.found


def test_brute_force_agrees_with_naive_predicates():
    naive = {
        ProblemKind.MD: naive_resolving,
        ProblemKind.LD: naive_ld,
        ProblemKind.ID: naive_id,
        ProblemKind.OLD: naive_old,
    }
    for seed in range(5):
        g = er_graph(7, 0.35, seed)
        for kind, pred in naive.items():
            res = brute_force_min(g, kind)
            if not res.found:
                continue
            best = None
            for size in range(g.n + 1):
                hits = [
                    c for c in itertools.combinations(range(g.n), size) if pred(g, c)
                ]
                if hits:
                    best = (size, set(hits[0]))
                    break
            assert best is not None and best[0] == res.size


# --- structural properties --------------------------------------------------


graphs_strategy = st.builds(
    er_graph,
    st.integers(min_value=2, max_value=8),
    st.sampled_from([0.2, 0.4, 0.6]),
    st.integers(min_value=0, max_value=50),
)


@given(graphs_strategy, st.sets(st.integers(min_value=0, max_value=7)))
@settings(max_examples=60, deadline=None)
def test_monotonicity_of_all_predicates(g, extra):
    base = {v for v in extra if v < g.n}
    preds = (is_resolving, is_locating_dominating, is_identifying, is_open_locating_dominating)
    sup = base | {0}
    for pred in preds:
        if pred(g, base):
            assert pred(g, sup)


@given(graphs_strategy, st.sets(st.integers(min_value=0, max_value=7)))
@settings(max_examples=60, deadline=None)
def test_identifying_implies_ld_implies_resolving(g, s):
    s = {v for v in s if v < g.n}
    if is_identifying(g, s):
        assert is_locating_dominating(g, s)
    if is_locating_dominating(g, s):
        assert is_resolving(g, s)


@given(graphs_strategy)
@settings(max_examples=60, deadline=None)
def test_vertex_set_resolves_and_identifies_iff_twin_free(g):
    everything = set(range(g.n))
    assert is_resolving(g, everything)
    assert is_identifying(g, everything) == (not has_twins(g))


def test_ordering_of_optimal_sizes():
    # MD <= LD <= ID on graphs where the identifying code exists
    for seed in range(8):
        g = er_graph(7, 0.45, seed)
        md = brute_force_min(g, ProblemKind.MD).size
        ld = brute_force_min(g, ProblemKind.LD).size
        assert md is not None and ld is not None and md <= ld
        rid = brute_force_min(g, ProblemKind.ID)
        if rid.found:
            assert ld <= rid.size


def test_distance2_minimum_equals_md_on_connected_interval_graphs():
    from helpers import connected_random_model

    for seed in range(12):
        m = connected_random_model(seed % 8 + 6, seed)
        g = build_graph(m)
        md = brute_force_min(g, ProblemKind.MD)
        d2 = brute_force_min_distance2(g)
        assert md.size == d2.size
