"""Fixed-parameter algorithm for metric dimension on interval graphs.

The solver runs a dynamic program over the path decomposition of the fourth
distance power of the input model. A configuration records, for one bag,
the partial solution inside the bag, a separation status for every bag pair
at distance at most two (0 = unseparated, 2 = separated strictly from the
left, 1 = separated otherwise), a flag per pair that still must be
separated strictly from the right, and the running solution size. Pairs
whose strict-right obligation can no longer be met (their rightmost steps
coincide or do not exist) kill the configuration; at the empty root bag the
smallest surviving count is the minimum size of a distance-2 resolving set,
which on interval graphs equals the metric dimension.

Configurations are packed into integers: bag vertices occupy fixed slots,
pair fields live at slot-pair positions (2 bits in ``sep``, 1 bit in
``sepr``), so deduplication keys are plain int triples and forgetting a
vertex is a couple of mask operations. ``check=True`` replays every event
on a naive pair-keyed representation and compares.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Optional

from .decomposition import FORGET, INTRODUCE, LEAF, ROOT, build_path_decomposition
from .graphs import INF, balls, build_graph, connected_components, power_model
from .intervals import Interval, IntervalModel
from .structure import leftmost_step_table, rightmost_step_table

DISCARD = -1


def bag_size_bound(k: int) -> int:
    """Largest bag a yes-instance can have in the fourth-power decomposition."""
    return 16 * k * k + 11 * k + 1


@dataclass(frozen=True)
class FptResult:
    size: Optional[int]
    witness: Optional[frozenset]
    reason: str  # "found" | "k-exceeded" | "bag-bound"
    trace: Optional[tuple] = None

    @property
    def found(self) -> bool:
        return self.size is not None


@dataclass(frozen=True)
class Configuration:
    """Decoded configuration (vertex-keyed), for inspection and tests."""

    solution_in_bag: frozenset
    sep: dict
    sepr: dict
    count: int


class _EventPlan:
    __slots__ = (
        "kind",
        "vertex",
        "slot_v",
        "bag_after",
        "slots_after",
        "pairs_after",
        "new_pairs",
        "bump",
        "clear",
        "obls",
        "keep_sep",
        "keep_sepr",
        "keep_s",
    )

    def __init__(self, kind, vertex):
        self.kind = kind
        self.vertex = vertex
        self.new_pairs = []
        self.bump = 0
        self.clear = 0
        self.obls = []


class DpContext:
    """Preprocessed model data plus per-event transition plans."""

    def __init__(self, model: IntervalModel, k: int):
        if k < 0:
            raise ValueError("k must be >= 0")
        self.model = model
        self.k = k
        self.g = build_graph(model)
        self.ball4 = balls(self.g, 4)
        self.ball2 = [
            {w for w, d in b.items() if 0 < d <= 2} for b in self.ball4
        ]
        self.rstep = rightmost_step_table(model, self.g)
        self.lstep = leftmost_step_table(model, self.g)
        self.power4 = power_model(model, 4)
        self.decomposition = build_path_decomposition(self.power4)
        self.max_bag = max(len(e.bag) for e in self.decomposition.events)
        self._n_pair_slots = self.max_bag * (self.max_bag - 1) // 2
        self._full_sep = (1 << (2 * self._n_pair_slots)) - 1
        self._full_sepr = (1 << self._n_pair_slots) - 1
        self.plans = self._build_plans()
        self.reset()

    # -- plan construction --------------------------------------------------

    def _build_plans(self):
        import heapq

        model = self.model
        left = [model.left(v) for v in range(model.n)]
        right = [model.right(v) for v in range(model.n)]
        ball4 = self.ball4
        ball2 = self.ball2

        slot_of: dict[int, int] = {}
        free = list(range(self.max_bag))
        heapq.heapify(free)
        live: dict[tuple[int, int], int] = {}  # (u, v) u<v -> pair position
        bag: list[int] = []
        plans = []

        def pairpos(su, sv):
            lo, hi = (su, sv) if su < sv else (sv, su)
            return hi * (hi - 1) // 2 + lo

        for event in self.decomposition.events:
            v = event.vertex
            plan = _EventPlan(event.kind, v)
            if event.kind in (LEAF, INTRODUCE):
                sv = heapq.heappop(free)
                slot_of[v] = sv
                plan.slot_v = sv
                d_v = ball4[v]
                if bag:
                    bump = 0
                    clear = 0
                    lv = left[v]
                    for (x, y), pp in live.items():
                        dx = d_v.get(x, INF)
                        dy = d_v.get(y, INF)
                        if dx != dy:
                            bump |= 1 << (2 * pp)
                            if lv > right[x] and lv > right[y]:
                                clear |= 1 << pp
                    plan.bump = bump
                    plan.clear = clear
                a = self.lstep[v]
                for w in sorted(bag):
                    if w not in ball2[v]:
                        continue
                    pp = pairpos(sv, slot_of[w])
                    b = self.lstep[w]
                    if a is None or b is None or a == b:
                        inh2 = -1
                    else:
                        lo, hi = (a, b) if a < b else (b, a)
                        assert (lo, hi) in live, "leftmost steps must share the bag"
                        inh2 = 2 * live[(lo, hi)]
                    lvw = min(left[v], left[w])
                    sl = 0
                    anysep = 0
                    bz = ball4[v]
                    bw = ball4[w]
                    for z in bag:
                        dzv = bz.get(z, INF)
                        dzw = bw.get(z, INF)
                        if dzv != dzw:
                            zbit = 1 << slot_of[z]
                            anysep |= zbit
                            if right[z] < lvw:
                                sl |= zbit
                    plan.new_pairs.append((2 * pp, inh2, sl, anysep))
                    lo, hi = (w, v) if w < v else (v, w)
                    live[(lo, hi)] = pp
                bag.append(v)
            else:  # forget or root
                sv = slot_of.pop(v)
                plan.slot_v = sv
                bag.remove(v)
                removed_sep = 0
                removed_sepr = 0
                for (x, y), pp in list(live.items()):
                    if x == v or y == v:
                        removed_sep |= 3 << (2 * pp)
                        removed_sepr |= 1 << pp
                plan.keep_sep = self._full_sep ^ removed_sep
                plan.keep_sepr = self._full_sepr ^ removed_sepr
                plan.keep_s = ((1 << self.max_bag) - 1) ^ (1 << sv)
                rv = self.rstep[v]
                for w in sorted(bag):
                    if w not in ball2[v]:
                        continue
                    lo, hi = (w, v) if w < v else (v, w)
                    ppvw = live[(lo, hi)]
                    rw = self.rstep[w]
                    if rv is None or rw is None or rv == rw:
                        target = DISCARD
                    else:
                        assert rv in slot_of and rw in slot_of, (
                            "rightmost steps must survive the forget"
                        )
                        target = pairpos(slot_of[rv], slot_of[rw])
                        tlo, thi = (rv, rw) if rv < rw else (rw, rv)
                        assert (tlo, thi) in live, "step pair must be in P"
                    plan.obls.append((2 * ppvw, ppvw, target))
                for key in [p for p in live if v in p]:
                    del live[key]
                heapq.heappush(free, sv)
            plan.bag_after = tuple(sorted(bag))
            plan.slots_after = dict(slot_of)
            plan.pairs_after = sorted((x, y, pp) for (x, y), pp in live.items())
            plans.append(plan)
        return plans

    # -- configuration transitions ------------------------------------------

    def reset(self):
        self.configs: dict = {}
        self.recs: list = []
        self.event_index = -1

    def _insert(self, cur, parents, added, key, cnt, pidx, av):
        entry = cur.get(key)
        if entry is None:
            cur[key] = (cnt, len(parents))
            parents.append(pidx)
            added.append(av)
        elif cnt < entry[0]:
            idx = entry[1]
            cur[key] = (cnt, idx)
            parents[idx] = pidx
            added[idx] = av

    def step(self) -> dict:
        """Process the next event, returning the new configuration set."""
        self.event_index += 1
        plan = self.plans[self.event_index]
        parents = array("l")
        added = array("l")
        cur: dict = {}
        k = self.k
        if plan.kind == LEAF:
            self._insert(cur, parents, added, (0, 0, 0), 0, -1, -1)
            if k >= 1:
                self._insert(
                    cur, parents, added, (1 << plan.slot_v, 0, 0), 1, -1, plan.vertex
                )
        elif plan.kind == INTRODUCE:
            vbit = 1 << plan.slot_v
            new_pairs = plan.new_pairs
            bump = plan.bump
            clear = plan.clear
            v = plan.vertex
            insert = self._insert
            for key, (cnt, pidx) in self.configs.items():
                smask, sep, sepr = key
                if cnt < k:
                    add = 0
                    for two_pp, inh2, sl, anysep in new_pairs:
                        if (inh2 >= 0 and (sep >> inh2) & 3 == 2) or smask & sl:
                            add |= 2 << two_pp
                        else:
                            add |= 1 << two_pp
                    bumped = sep | (bump & ~(sep | (sep >> 1)))
                    insert(
                        cur,
                        parents,
                        added,
                        (smask | vbit, bumped | add, sepr & ~clear),
                        cnt + 1,
                        pidx,
                        v,
                    )
                add = 0
                for two_pp, inh2, sl, anysep in new_pairs:
                    if (inh2 >= 0 and (sep >> inh2) & 3 == 2) or smask & sl:
                        add |= 2 << two_pp
                    elif smask & anysep:
                        add |= 1 << two_pp
                insert(cur, parents, added, (smask, sep | add, sepr), cnt, pidx, -1)
        else:  # forget / root
            obls = plan.obls
            keep_sep = plan.keep_sep
            keep_sepr = plan.keep_sepr
            keep_s = plan.keep_s
            insert = self._insert
            for key, (cnt, pidx) in self.configs.items():
                smask, sep, sepr = key
                ob = 0
                dead = False
                for two_ppvw, ppvw, target in obls:
                    if (sep >> two_ppvw) & 3 == 0 or (sepr >> ppvw) & 1:
                        if target < 0:
                            dead = True
                            break
                        ob |= 1 << target
                if dead:
                    continue
                insert(
                    cur,
                    parents,
                    added,
                    (smask & keep_s, sep & keep_sep, (sepr & keep_sepr) | ob),
                    cnt,
                    pidx,
                    -1,
                )
        self.recs.append((parents, added))
        self.configs = cur
        return cur

    # -- decoding ------------------------------------------------------------

    def decode(self, key, cnt) -> Configuration:
        plan = self.plans[self.event_index]
        smask, sep, sepr = key
        sol = frozenset(
            v for v, sl in plan.slots_after.items() if (smask >> sl) & 1
        )
        sep_d = {}
        sepr_d = {}
        for x, y, pp in plan.pairs_after:
            sep_d[(x, y)] = (sep >> (2 * pp)) & 3
            sepr_d[(x, y)] = (sepr >> pp) & 1
        return Configuration(sol, sep_d, sepr_d, cnt)

    def decoded_configs(self) -> dict:
        out = {}
        for key, (cnt, _) in self.configs.items():
            c = self.decode(key, cnt)
            out[
                (
                    c.solution_in_bag,
                    tuple(sorted(c.sep.items())),
                    tuple(sorted(c.sepr.items())),
                )
            ] = c.count
        return out


def process_leaf(context: DpContext) -> dict:
    assert context.plans[context.event_index + 1].kind == LEAF
    return context.step()


def process_introduce(configs: dict, v: int, context: DpContext) -> dict:
    plan = context.plans[context.event_index + 1]
    assert plan.kind == INTRODUCE and plan.vertex == v
    assert configs is context.configs
    return context.step()


def process_forget(configs: dict, v: int, context: DpContext) -> dict:
    plan = context.plans[context.event_index + 1]
    assert plan.kind in (FORGET, ROOT) and plan.vertex == v
    assert configs is context.configs
    return context.step()


def fpt_metric_dimension(
    model: IntervalModel,
    k: int,
    collect_trace: bool = False,
    check: bool = False,
) -> FptResult:
    """Minimum resolving-set size (with witness) if it is at most k, else no.

    A bag of the fourth-power decomposition larger than ``bag_size_bound(k)``
    proves the answer is no before any configuration is built. Disconnected
    models are solved per component; with an infinite distance counting as a
    value of its own, a resolving set must additionally meet every component
    except at most one, and only a single-vertex component can afford to be
    missed.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    g = build_graph(model)
    comps = connected_components(g)
    if len(comps) == 1:
        return _fpt_connected(model, k, collect_trace, check)

    total = 0
    witness: set[int] = set()
    traces: list = []
    singles = sorted(c[0] for c in comps if len(c) == 1)
    for comp in comps:
        if len(comp) == 1:
            continue
        sub = IntervalModel(
            Interval(i, model.left(v), model.right(v))
            for i, v in enumerate(comp)
        )
        budget = k - total
        if budget < 1:
            return FptResult(None, None, "k-exceeded")
        res = _fpt_connected(sub, budget, collect_trace, check)
        if not res.found:
            return FptResult(None, None, res.reason)
        total += res.size
        witness.update(comp[i] for i in res.witness)
        if collect_trace:
            traces.extend(res.trace)
    if singles:
        total += len(singles) - 1
        witness.update(singles[1:])
    if total > k:
        return FptResult(None, None, "k-exceeded")
    return FptResult(
        total, frozenset(witness), "found", tuple(traces) if collect_trace else None
    )


def _fpt_connected(
    model: IntervalModel, k: int, collect_trace: bool, check: bool
) -> FptResult:
    ctx = DpContext(model, k)
    if ctx.max_bag > bag_size_bound(k):
        return FptResult(None, None, "bag-bound", () if collect_trace else None)
    trace = [] if collect_trace else None
    shadow = _ShadowState(ctx) if check else None
    for i, plan in enumerate(ctx.plans):
        cur = ctx.step()
        if trace is not None:
            trace.append((i, len(plan.bag_after), len(plan.pairs_after), len(cur)))
        if shadow is not None:
            shadow.step(plan)
            shadow.compare(ctx)
            b = max(1, len(plan.bag_after))
            assert len(cur) <= 3 ** (2 * b * b)
        if not cur:
            return FptResult(
                None, None, "k-exceeded", tuple(trace) if trace is not None else None
            )
    assert set(ctx.configs) <= {(0, 0, 0)}
    (cnt, idx) = ctx.configs[(0, 0, 0)]
    witness = set()
    for parents, added in reversed(ctx.recs):
        av = added[idx]
        if av >= 0:
            witness.add(av)
        idx = parents[idx]
    assert len(witness) == cnt
    return FptResult(
        cnt, frozenset(witness), "found", tuple(trace) if trace is not None else None
    )


# --- naive pair-keyed shadow (check mode) -----------------------------------


class _ShadowState:
    """Re-runs every transition on vertex-keyed dicts and compares."""

    def __init__(self, ctx: DpContext):
        self.ctx = ctx
        self.configs: dict = {}
        self.pairs: list = []
        self.bag: tuple = ()

    def _dist(self, u, v):
        return self.ctx.ball4[u].get(v, INF)

    def step(self, plan):
        ctx = self.ctx
        model = ctx.model
        k = ctx.k
        out: dict = {}

        def emit(S, sep, sepr, cnt):
            key = (
                frozenset(S),
                tuple(sorted(sep.items())),
                tuple(sorted(sepr.items())),
            )
            if key not in out or cnt < out[key]:
                out[key] = cnt

        v = plan.vertex
        if plan.kind == LEAF:
            emit(frozenset(), {}, {}, 0)
            if k >= 1:
                emit(frozenset([v]), {}, {}, 1)
            self.bag = (v,)
        elif plan.kind == INTRODUCE:
            old_pairs = list(self.pairs)
            new_pairs = [
                tuple(sorted((v, w))) for w in self.bag if w in ctx.ball2[v]
            ]
            lv = model.left(v)
            for (S, sep_t, sepr_t), cnt in self.configs.items():
                sep = dict(sep_t)
                sepr = dict(sepr_t)
                # branch: v joins the solution
                if cnt < k:
                    sep1 = dict(sep)
                    sepr1 = dict(sepr)
                    for (x, y) in old_pairs:
                        if self._dist(v, x) != self._dist(v, y):
                            if sep1[(x, y)] == 0:
                                sep1[(x, y)] = 1
                            if lv > model.right(x) and lv > model.right(y):
                                sepr1[(x, y)] = 0
                    for (x, y) in new_pairs:
                        w = x if y == v else y
                        sep1[(x, y)] = 2 if self._strict_left(S, sep, v, w) else 1
                        sepr1[(x, y)] = 0
                    emit(S | {v}, sep1, sepr1, cnt + 1)
                # branch: v stays out
                sep2 = dict(sep)
                sepr2 = dict(sepr)
                for (x, y) in new_pairs:
                    w = x if y == v else y
                    if self._strict_left(S, sep, v, w):
                        sep2[(x, y)] = 2
                    elif any(self._dist(z, v) != self._dist(z, w) for z in S):
                        sep2[(x, y)] = 1
                    else:
                        sep2[(x, y)] = 0
                    sepr2[(x, y)] = 0
                emit(S, sep2, sepr2, cnt)
            self.pairs = old_pairs + new_pairs
            self.bag = self.bag + (v,)
        else:
            keep = [p for p in self.pairs if v not in p]
            gone = [p for p in self.pairs if v in p]
            for (S, sep_t, sepr_t), cnt in self.configs.items():
                sep = dict(sep_t)
                sepr = dict(sepr_t)
                ob = []
                dead = False
                for (x, y) in gone:
                    if sep[(x, y)] == 0 or sepr[(x, y)] == 1:
                        w = x if y == v else y
                        rv, rw = self.ctx.rstep[v], self.ctx.rstep[w]
                        if rv is None or rw is None or rv == rw:
                            dead = True
                            break
                        ob.append(tuple(sorted((rv, rw))))
                if dead:
                    continue
                sep_n = {p: sep[p] for p in keep}
                sepr_n = {p: sepr[p] for p in keep}
                for p in ob:
                    sepr_n[p] = 1
                emit(S - {v}, sep_n, sepr_n, cnt)
            self.pairs = keep
            self.bag = tuple(w for w in self.bag if w != v)
        self.configs = out

    def _strict_left(self, S, sep, v, w):
        ctx = self.ctx
        a, b = ctx.lstep[v], ctx.lstep[w]
        if a is not None and b is not None and a != b:
            if sep[tuple(sorted((a, b)))] == 2:
                return True
        lvw = min(ctx.model.left(v), ctx.model.left(w))
        return any(
            ctx.model.right(z) < lvw and self._dist(z, v) != self._dist(z, w)
            for z in S
        )

    def compare(self, ctx: DpContext):
        fast = ctx.decoded_configs()
        naive = {key: cnt for key, cnt in self.configs.items()}
        assert fast == naive, (
            f"slot-packed and pair-keyed configurations diverge at event "
            f"{ctx.event_index}: {len(fast)} vs {len(naive)} configs"
        )
