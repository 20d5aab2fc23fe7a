"""Shared test utilities: independent oracles kept deliberately naive."""

import random

from igsep.graphs import INF, Graph, build_graph
from igsep.intervals import random_model


def er_graph(n, p, seed):
    rng = random.Random(f"er:{n}:{p}:{seed}")
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def floyd_warshall(g):
    n = g.n
    d = [[0 if i == j else (1 if j in g.adj[i] else INF) for j in range(n)] for i in range(n)]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik is INF:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return d


def naive_resolving(g, s):
    d = floyd_warshall(g)
    vecs = [tuple(d[x][v] for x in sorted(s)) for v in range(g.n)]
    return len(set(vecs)) == g.n


def naive_distance2_resolving(g, s):
    d = floyd_warshall(g)
    sl = sorted(s)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if d[u][v] <= 2 and all(d[x][u] == d[x][v] for x in sl):
                return False
    return True


def naive_ld(g, s):
    s = set(s)
    for v in range(g.n):
        if v not in s and not (g.adj[v] & s):
            return False
    traces = [frozenset(g.adj[v] & s) for v in range(g.n) if v not in s]
    return len(set(traces)) == len(traces)


def naive_id(g, s):
    s = set(s)
    traces = [frozenset((g.adj[v] | {v}) & s) for v in range(g.n)]
    return all(traces) and len(set(traces)) == g.n


def naive_old(g, s):
    s = set(s)
    traces = [frozenset(g.adj[v] & s) for v in range(g.n)]
    return all(traces) and len(set(traces)) == g.n


def is_connected(g):
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def connected_random_model(n, seed, style="uniform-endpoints", window=4):
    """First seed offset whose model is connected (deterministic)."""
    s = seed
    while True:
        m = random_model(n, s, style, window=window)
        if is_connected(build_graph(m)):
            return m
        s += 100003


def yes_3dm_instance(n, m, seed):
    """A 3DM instance with a planted perfect matching; returns (instance,
    matching indices)."""
    from igsep.reductions import ThreeDMInstance

    rng = random.Random(f"3dm:{n}:{m}:{seed}")
    perm_b = rng.sample(range(n), n)
    perm_c = rng.sample(range(n), n)
    triples = [(i, perm_b[i], perm_c[i]) for i in range(n)]
    while len(triples) < m:
        triples.append(
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
        )
    order = list(range(m))
    rng.shuffle(order)
    shuffled = tuple(triples[i] for i in order)
    matching = sorted(order.index(i) for i in range(n))
    return ThreeDMInstance(n, shuffled), matching


def is_chordal(g):
    """Maximum cardinality search + perfect elimination ordering check."""
    n = g.n
    weight = [0] * n
    order = []
    placed = [False] * n
    for _ in range(n):
        u = max((v for v in range(n) if not placed[v]), key=lambda v: (weight[v], -v))
        placed[u] = True
        order.append(u)
        for w in g.adj[u]:
            if not placed[w]:
                weight[w] += 1
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.adj[v] if pos[w] < pos[v]]
        if not earlier:
            continue
        u = max(earlier, key=lambda w: pos[w])
        for w in earlier:
            if w != u and w not in g.adj[u]:
                return False
    return True
