"""Verification predicates and brute-force exact solvers for the four
distinguishing problems: metric dimension (MD), locating-dominating sets
(LD), identifying codes (ID) and open locating-dominating sets (OLD).

Disconnected graphs are allowed throughout: an infinite distance compares
as a distance value of its own, so vertices in different components are
separated by any vertex that sees exactly one of them.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .graphs import Graph, all_pairs_distances


class ProblemKind(Enum):
    MD = "md"
    LD = "ld"
    ID = "id"
    OLD = "old"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a minimum-solution search.

    ``reason`` distinguishes a too-small budget ("budget-exceeded") from
    structural infeasibility ("twins", "open-twins", "isolated-vertex").
    """

    size: Optional[int]
    witness: Optional[frozenset]
    reason: str

    @property
    def found(self) -> bool:
        return self.size is not None

    def __bool__(self) -> bool:
        return self.found


def has_twins(g: Graph) -> bool:
    """True iff two vertices share the same closed neighborhood."""
    seen = set()
    for m in g.closed_masks():
        if m in seen:
            return True
        seen.add(m)
    return False


def has_open_twins(g: Graph) -> bool:
    """True iff two vertices share the same open neighborhood."""
    seen = set()
    for m in g.adj_masks():
        if m in seen:
            return True
        seen.add(m)
    return False


def is_resolving(g: Graph, s: Iterable[int], dists=None) -> bool:
    return first_violation(g, ProblemKind.MD, s, dists) is None


def is_distance2_resolving(g: Graph, s: Iterable[int], dists=None) -> bool:
    """Every pair at distance <= 2 is separated by some member of s."""
    if dists is None:
        dists = all_pairs_distances(g)
    sl = sorted(set(s))
    for u in range(g.n):
        du = dists[u]
        for v in range(u + 1, g.n):
            if du[v] > 2:
                continue
            if all(dists[x][u] == dists[x][v] for x in sl):
                return False
    return True


def is_locating_dominating(g: Graph, s: Iterable[int]) -> bool:
    return first_violation(g, ProblemKind.LD, s) is None


def is_identifying(g: Graph, s: Iterable[int]) -> bool:
    return first_violation(g, ProblemKind.ID, s) is None


def is_open_locating_dominating(g: Graph, s: Iterable[int]) -> bool:
    return first_violation(g, ProblemKind.OLD, s) is None


def first_violation(g: Graph, kind: ProblemKind, s: Iterable[int], dists=None):
    """None if s is a valid solution, else the first violated requirement:
    ("undominated", v) or ("pair", u, v)."""
    sset = set(s)
    n = g.n
    if kind is ProblemKind.MD:
        if dists is None:
            dists = all_pairs_distances(g)
        sl = sorted(sset)
        for u in range(n):
            for v in range(u + 1, n):
                if all(dists[x][u] == dists[x][v] for x in sl):
                    return ("pair", u, v)
        return None

    smask = 0
    for x in sset:
        smask |= 1 << x
    if kind is ProblemKind.LD:
        nbhd = g.adj_masks()
        for v in range(n):
            if v not in sset and nbhd[v] & smask == 0:
                return ("undominated", v)
        traces = {}
        for v in range(n):
            if v in sset:
                continue
            t = nbhd[v] & smask
            if t in traces:
                return ("pair", traces[t], v)
            traces[t] = v
        return None

    nbhd = g.closed_masks() if kind is ProblemKind.ID else g.adj_masks()
    traces = {}
    for v in range(n):
        t = nbhd[v] & smask
        if t == 0:
            return ("undominated", v)
        if t in traces:
            return ("pair", traces[t], v)
        traces[t] = v
    return None


# --- brute-force minimum search -------------------------------------------

_D2 = "d2"  # internal pair restriction: distance-2 resolving sets


def _cover_masks(g: Graph, kind, dists=None):
    """Per-vertex coverage bitmasks.

    Returns (pair_cover, full_pairs, dom_cover, full_dom) where a candidate
    set S is valid iff OR of pair_cover over S equals full_pairs and OR of
    dom_cover over S equals full_dom.
    """
    n = g.n
    pairs = []
    if kind is ProblemKind.MD or kind == _D2:
        if dists is None:
            dists = all_pairs_distances(g)
        for u in range(n):
            du = dists[u]
            for v in range(u + 1, n):
                if kind == _D2 and du[v] > 2:
                    continue
                pairs.append((u, v))
        pair_cover = [0] * n
        for p, (u, v) in enumerate(pairs):
            bit = 1 << p
            for x in range(n):
                if dists[x][u] != dists[x][v]:
                    pair_cover[x] |= bit
        return pair_cover, (1 << len(pairs)) - 1, [0] * n, 0

    nbhd = g.closed_masks() if kind is ProblemKind.ID else g.adj_masks()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    pair_cover = [0] * n
    for p, (u, v) in enumerate(pairs):
        diff = nbhd[u] ^ nbhd[v]
        if kind is ProblemKind.LD:
            diff |= (1 << u) | (1 << v)
        bit = 1 << p
        x = 0
        while diff:
            if diff & 1:
                pair_cover[x] |= bit
            diff >>= 1
            x += 1
    dom = g.closed_masks() if kind in (ProblemKind.LD, ProblemKind.ID) else nbhd
    dom_cover = [0] * n
    for v in range(n):
        m = dom[v]
        x = 0
        while m:
            if m & 1:
                dom_cover[x] |= 1 << v
            m >>= 1
            x += 1
    return pair_cover, (1 << len(pairs)) - 1, dom_cover, (1 << n) - 1


def _scan_chunk(chunk, pair_cover, full_pairs, dom_cover, full_dom):
    for combo in chunk:
        acc_p = 0
        acc_d = 0
        for x in combo:
            acc_p |= pair_cover[x]
            acc_d |= dom_cover[x]
        if acc_p == full_pairs and acc_d == full_dom:
            return combo
    return None


def brute_force_min(
    g: Graph,
    kind: ProblemKind,
    k_max: Optional[int] = None,
    threads: int = 1,
    dists=None,
    _pair_restriction=None,
) -> SearchResult:
    """Minimum solution by subset enumeration in increasing size.

    Deterministic: among minimum solutions the lexicographically smallest
    vertex set is returned, regardless of thread count.
    """
    n = g.n
    if k_max is None:
        k_max = n
    if not 0 <= k_max <= n:
        raise ValueError("k_max must be between 0 and n")
    if kind is ProblemKind.ID and has_twins(g):
        return SearchResult(None, None, "twins")
    if kind is ProblemKind.OLD:
        if any(not g.adj[v] for v in range(n)):
            return SearchResult(None, None, "isolated-vertex")
        if has_open_twins(g):
            return SearchResult(None, None, "open-twins")
    mask_kind = _pair_restriction or kind
    pair_cover, full_pairs, dom_cover, full_dom = _cover_masks(g, mask_kind, dists)

    for size in range(k_max + 1):
        combos = itertools.combinations(range(n), size)
        if threads <= 1:
            hit = _scan_chunk(combos, pair_cover, full_pairs, dom_cover, full_dom)
        else:
            hit = None
            chunks = []
            while True:
                chunk = list(itertools.islice(combos, 4096))
                if not chunk:
                    break
                chunks.append(chunk)
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = pool.map(
                    lambda c: _scan_chunk(
                        c, pair_cover, full_pairs, dom_cover, full_dom
                    ),
                    chunks,
                )
                for r in results:
                    if r is not None:
                        hit = r
                        break
        if hit is not None:
            return SearchResult(size, frozenset(hit), "found")
    return SearchResult(None, None, "budget-exceeded")


def brute_force_min_distance2(
    g: Graph, kind=None, k_max: Optional[int] = None, threads: int = 1, dists=None
) -> SearchResult:
    """Minimum distance-2 resolving set (same contract as brute_force_min)."""
    return brute_force_min(
        g, ProblemKind.MD, k_max, threads, dists, _pair_restriction=_D2
    )
