"""Hard-instance constructions for the distinguishing problems.

``build_reduction`` turns a 3-dimensional matching instance into an interval
model whose minimum locating-dominating set (or identifying code, or open
locating-dominating set, by choice of dominating gadget) has a prescribed
size exactly when the instance has a perfect matching. The construction
assembles, per triple, four private choice pairs and five transmitter
gadgets; each element of the ground set is a choice pair of its own that can
only be separated by the transmitters of triples containing it.

Geometry is produced as a single left-to-right sequence of endpoint symbols,
then coordinates are assigned by rank. Every placement constraint that the
argument relies on is re-checked after assembly by ``audit_reduction``
rather than trusted.

The module also carries the diameter-2 transformations f1/f2/f3 that shift
the four solution sizes by fixed constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codes import ProblemKind
from .graphs import Graph, build_graph
from .intervals import Interval, IntervalModel, ValidationError


# --- dominating gadgets ------------------------------------------------------


@dataclass(frozen=True)
class DominatingGadget:
    """A path gadget forcing d local solution vertices.

    ``standard_local`` indexes an optimal local solution such that no gadget
    vertex is adjacent-or-equal to all of it.
    """

    kind: ProblemKind
    d: int
    order: int
    standard_local: tuple[int, ...]


LD_GADGET = DominatingGadget(ProblemKind.LD, 2, 4, (0, 3))
ID_GADGET = DominatingGadget(ProblemKind.ID, 3, 5, (0, 2, 4))
# The four middle vertices: {x2,..,x5} is a minimum open locating-dominating
# set of the 6-path (the end vertices would not be totally dominated).
OLD_GADGET = DominatingGadget(ProblemKind.OLD, 4, 6, (1, 2, 3, 4))

_GADGETS = {g.kind: g for g in (LD_GADGET, ID_GADGET, OLD_GADGET)}


def gadget_for(kind: ProblemKind) -> DominatingGadget:
    if kind not in _GADGETS:
        raise ValidationError(f"no dominating gadget for {kind}")
    return _GADGETS[kind]


# --- diameter-2 transformations ----------------------------------------------


def f1(g: Graph) -> Graph:
    """Add a universal vertex u = n and a degree-1 neighbor v = n+1 of u."""
    n = g.n
    edges = g.edges()
    edges += [(x, n) for x in range(n)]
    edges.append((n, n + 1))
    return Graph(n + 2, edges)


def f2(g: Graph) -> Graph:
    """f1 plus a closed twin w = n+2 of v (u, v, w form a triangle)."""
    n = g.n
    h = f1(g)
    return Graph(n + 3, h.edges() + [(n, n + 2), (n + 1, n + 2)])


def f3(g: Graph) -> Graph:
    """Add adjacent universal vertices u = n, u' = n+1 and two non-adjacent
    vertices v = n+2, w = n+3 whose only neighbors are u and u'."""
    n = g.n
    u, u2, v, w = n, n + 1, n + 2, n + 3
    edges = g.edges()
    for x in range(n):
        edges.append((x, u))
        edges.append((x, u2))
    edges += [(u, u2), (u, v), (u2, v), (u, w), (u2, w)]
    return Graph(n + 4, edges)


# --- 3-dimensional matching instances ----------------------------------------


@dataclass(frozen=True)
class ThreeDMInstance:
    """Ground sets A, B, C of size n and m triples of A x B x C (0-indexed)."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("ground-set size must be >= 1")
        if not self.triples:
            raise ValidationError("instance needs at least one triple")
        for t in self.triples:
            if len(t) != 3 or any(not 0 <= x < self.n for x in t):
                raise ValidationError(f"triple {t} out of range")

    @property
    def m(self) -> int:
        return len(self.triples)

    def is_perfect_matching(self, indices: Iterable[int]) -> bool:
        idx = sorted(indices)
        if len(idx) != self.n or len(set(idx)) != len(idx):
            return False
        if any(not 0 <= i < self.m for i in idx):
            return False
        for part in range(3):
            covered = [self.triples[i][part] for i in idx]
            if sorted(covered) != list(range(self.n)):
                return False
        return True


# --- assembled structure records ---------------------------------------------


@dataclass(frozen=True)
class GadgetInstance:
    name: str
    members: tuple[int, ...]
    standard: tuple[int, ...]


@dataclass(frozen=True)
class ChoicePairInstance:
    name: str
    first: int
    second: int
    gadget: GadgetInstance
    separators: tuple[int, ...]  # the only vertices allowed to separate it


@dataclass(frozen=True)
class TransmitterInstance:
    name: str
    path: dict  # role -> vertex id for u, uv1, uv2, v, vw1, vw2, w
    gadgets: tuple[GadgetInstance, ...]  # D(u), D(uv), D(v), D(vw), D(w)

    def standard_vertices(self) -> set[int]:
        out: set[int] = set()
        for gi in self.gadgets:
            out.update(gi.standard)
        return out

    def tight(self) -> frozenset:
        return frozenset(self.standard_vertices() | {self.path["v"]})

    def nontight(self) -> frozenset:
        return frozenset(
            self.standard_vertices() | {self.path["u"], self.path["w"]}
        )

    def internal_pairs(self) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
        p = self.path
        return [
            ((p["uv1"], p["uv2"]), (p["u"], p["v"])),
            ((p["vw1"], p["vw2"]), (p["v"], p["w"])),
        ]


@dataclass(frozen=True)
class TripleInstance:
    index: int
    triple: tuple[int, int, int]
    pairs: dict  # "p"/"q"/"r"/"s" -> ChoicePairInstance
    transmitters: dict  # "pq"/"rs"/"sa"/"prb"/"qrc" -> TransmitterInstance

    def solution(self, nontight: bool) -> set[int]:
        """Tight (29d+7) or non-tight (29d+8) standard solution vertices."""
        out: set[int] = set()
        for key in ("sa", "qrc", "prb"):
            tr = self.transmitters[key]
            out |= tr.nontight() if nontight else tr.tight()
        for key in ("pq", "rs"):
            tr = self.transmitters[key]
            out |= tr.tight() if nontight else tr.nontight()
        for pair in self.pairs.values():
            out.update(pair.gadget.standard)
        return out


@dataclass(frozen=True)
class ElementInstance:
    part: str  # "A" | "B" | "C"
    index: int
    pair: ChoicePairInstance


@dataclass(frozen=True)
class ReductionOutput:
    model: IntervalModel
    roles: tuple[str, ...]
    order: int
    expected_solution_size: int
    gadget: DominatingGadget
    instance: ThreeDMInstance
    triples: tuple[TripleInstance, ...]
    elements: tuple[ElementInstance, ...]

    def all_gadget_instances(self) -> list[GadgetInstance]:
        out = []
        for t in self.triples:
            for pair in t.pairs.values():
                out.append(pair.gadget)
            for tr in t.transmitters.values():
                out.extend(tr.gadgets)
        for e in self.elements:
            out.append(e.pair.gadget)
        return out

    def designated_choice_pairs(self) -> list[ChoicePairInstance]:
        out = []
        for t in self.triples:
            out.extend(t.pairs.values())
            for tr in t.transmitters.values():
                for (x, y), seps in tr.internal_pairs():
                    out.append(
                        ChoicePairInstance(
                            f"{tr.name}.internal", x, y, None, seps
                        )
                    )
        for e in self.elements:
            out.append(e.pair)
        return out


# --- assembly ----------------------------------------------------------------


class _Assembler:
    """Collects vertices and a global left-to-right endpoint order."""

    def __init__(self):
        self.roles: list[str] = []
        self.seq: list[tuple[int, int]] = []  # (vertex, 0=left / 1=right)

    def vertex(self, role: str) -> int:
        self.roles.append(role)
        return len(self.roles) - 1

    def put_l(self, vid: int):
        self.seq.append((vid, 0))

    def put_r(self, vid: int):
        self.seq.append((vid, 1))

    def gadget(self, name: str, proto: DominatingGadget) -> GadgetInstance:
        k = proto.order
        vids = [self.vertex(f"{name}.x{j + 1}") for j in range(k)]
        self.put_l(vids[0])
        self.put_l(vids[1])
        for j in range(2, k):
            self.put_r(vids[j - 2])
            self.put_l(vids[j])
        self.put_r(vids[k - 2])
        self.put_r(vids[k - 1])
        return GadgetInstance(
            name, tuple(vids), tuple(vids[j] for j in proto.standard_local)
        )

    def model(self) -> IntervalModel:
        lefts: dict[int, int] = {}
        rights: dict[int, int] = {}
        for coord, (vid, side) in enumerate(self.seq):
            store = lefts if side == 0 else rights
            assert vid not in store, f"vertex {vid} placed twice on side {side}"
            store[vid] = coord
        n = len(self.roles)
        assert len(lefts) == n and len(rights) == n, "every vertex needs both endpoints"
        return IntervalModel(
            Interval(v, lefts[v], rights[v]) for v in range(n)
        )


def _emit_pair(asm, name, proto, lam=(), interior=(), rho=(), suffixes=("1", "2")):
    """Choice pair band. ``lam``/``interior``/``rho`` are item lists placed in
    the left window, between the gadget and the first right endpoint, and in
    the right window; items are ("L"|"R", vid) or ("D", name) whose gadgets
    are returned in order."""
    p1 = asm.vertex(f"{name}{suffixes[0]}")
    p2 = asm.vertex(f"{name}{suffixes[1]}")
    gadgets = []

    def run(items):
        for item in items:
            if item[0] == "D":
                gadgets.append(asm.gadget(item[1], proto))
            elif item[0] == "L":
                asm.put_l(item[1])
            else:
                asm.put_r(item[1])

    asm.put_l(p1)
    run(lam)
    asm.put_l(p2)
    own = asm.gadget(f"{name}.D", proto)
    run(interior)
    asm.put_r(p1)
    run(rho)
    asm.put_r(p2)
    return p1, p2, own, gadgets


def _emit_between_core(asm, name, proto, u, w):
    """Core of a two-anchor transmitter: u's left endpoint and w's right
    endpoint are placed by the caller inside the anchor pairs' windows."""
    uv1 = asm.vertex(f"{name}.uv1")
    uv2 = asm.vertex(f"{name}.uv2")
    v = asm.vertex(f"{name}.v")
    vw1 = asm.vertex(f"{name}.vw1")
    vw2 = asm.vertex(f"{name}.vw2")
    d_u = asm.gadget(f"{name}.D(u)", proto)
    asm.put_l(uv1)
    asm.put_r(u)
    asm.put_l(uv2)
    d_uv = asm.gadget(f"{name}.D(uv)", proto)
    asm.put_r(uv1)
    asm.put_l(v)
    asm.put_r(uv2)
    d_v = asm.gadget(f"{name}.D(v)", proto)
    asm.put_l(vw1)
    asm.put_r(v)
    asm.put_l(vw2)
    d_vw = asm.gadget(f"{name}.D(vw)", proto)
    asm.put_r(vw1)
    asm.put_l(w)
    asm.put_r(vw2)
    d_w = asm.gadget(f"{name}.D(w)", proto)
    path = {"u": u, "uv1": uv1, "uv2": uv2, "v": v, "vw1": vw1, "vw2": vw2, "w": w}
    return TransmitterInstance(name, path, (d_u, d_uv, d_v, d_vw, d_w))


def _emit_triple(asm, ti, triple, proto, arrivals):
    """One triple gadget band; long transmitter arms toward the element pairs
    are deferred through ``arrivals``."""
    a, b, c = triple
    P = f"T{ti}"

    u_pq = asm.vertex(f"{P}.Tr(p,q).u")
    w_pq = asm.vertex(f"{P}.Tr(p,q).w")
    u_rs = asm.vertex(f"{P}.Tr(r,s).u")
    w_rs = asm.vertex(f"{P}.Tr(r,s).w")
    u_sa = asm.vertex(f"{P}.Tr(s,a).u")
    w_sa = asm.vertex(f"{P}.Tr(s,a).w")
    prb = f"{P}.Tr(p,r,b)"
    u_prb = asm.vertex(f"{prb}.u")
    uv1_prb = asm.vertex(f"{prb}.uv1")
    uv2_prb = asm.vertex(f"{prb}.uv2")
    v_prb = asm.vertex(f"{prb}.v")
    vw1_prb = asm.vertex(f"{prb}.vw1")
    vw2_prb = asm.vertex(f"{prb}.vw2")
    w_prb = asm.vertex(f"{prb}.w")
    qrc = f"{P}.Tr(q,r,c)"
    u_qrc = asm.vertex(f"{qrc}.u")
    uv1_qrc = asm.vertex(f"{qrc}.uv1")
    uv2_qrc = asm.vertex(f"{qrc}.uv2")
    v_qrc = asm.vertex(f"{qrc}.v")
    vw1_qrc = asm.vertex(f"{qrc}.vw1")
    vw2_qrc = asm.vertex(f"{qrc}.vw2")
    w_qrc = asm.vertex(f"{qrc}.w")

    p1, p2, d_p, _ = _emit_pair(
        asm, f"{P}.p", proto, rho=[("L", u_prb), ("L", u_pq)]
    )
    tr_pq = _emit_between_core(asm, f"{P}.Tr(p,q)", proto, u_pq, w_pq)
    q1, q2, d_q, _ = _emit_pair(
        asm, f"{P}.q", proto, lam=[("R", w_pq)], rho=[("L", u_qrc)]
    )
    d_u_prb = asm.gadget(f"{prb}.D(u)", proto)

    # Tr(q,r,c) front: everything up to the vw pair lies strictly between q and r
    d_u_qrc = asm.gadget(f"{qrc}.D(u)", proto)
    asm.put_l(uv1_qrc)
    asm.put_r(u_qrc)
    asm.put_l(uv2_qrc)
    d_uv_qrc = asm.gadget(f"{qrc}.D(uv)", proto)
    asm.put_r(uv1_qrc)
    asm.put_l(v_qrc)
    asm.put_r(uv2_qrc)
    d_v_qrc = asm.gadget(f"{qrc}.D(v)", proto)
    asm.put_l(vw1_qrc)
    asm.put_r(v_qrc)
    asm.put_l(vw2_qrc)
    d_vw_qrc = asm.gadget(f"{qrc}.D(vw)", proto)

    # uv1/uv2 of Tr(p,r,b) start inside r1's left window and run past pair s:
    # their gadget signature must differ from the r pair's own.
    r1, r2, d_r, r_gadgets = _emit_pair(
        asm,
        f"{P}.r",
        proto,
        lam=[("L", uv1_prb), ("R", u_prb), ("L", uv2_prb)],
        interior=[("D", f"{prb}.D(uv)")],
        rho=[("R", vw1_qrc), ("L", w_qrc), ("R", vw2_qrc), ("L", u_rs)],
    )
    d_uv_prb = r_gadgets[0]
    tr_rs = _emit_between_core(asm, f"{P}.Tr(r,s)", proto, u_rs, w_rs)
    s1, s2, d_s, _ = _emit_pair(
        asm, f"{P}.s", proto, lam=[("R", w_rs)], rho=[("L", u_sa)]
    )
    d_w_qrc = asm.gadget(f"{qrc}.D(w)", proto)
    tr_sa = _emit_between_core(asm, f"{P}.Tr(s,a)", proto, u_sa, w_sa)
    # tail of Tr(p,r,b): v, the vw pair and w live after pair s
    asm.put_r(uv1_prb)
    asm.put_l(v_prb)
    asm.put_r(uv2_prb)
    d_v_prb = asm.gadget(f"{prb}.D(v)", proto)
    asm.put_l(vw1_prb)
    asm.put_r(v_prb)
    asm.put_l(vw2_prb)
    d_vw_prb = asm.gadget(f"{prb}.D(vw)", proto)
    asm.put_r(vw1_prb)
    asm.put_l(w_prb)
    asm.put_r(vw2_prb)
    d_w_prb = asm.gadget(f"{prb}.D(w)", proto)

    arrivals[("A", a)].append(w_sa)
    arrivals[("B", b)].append(w_prb)
    arrivals[("C", c)].append(w_qrc)

    tr_prb = TransmitterInstance(
        prb,
        {
            "u": u_prb,
            "uv1": uv1_prb,
            "uv2": uv2_prb,
            "v": v_prb,
            "vw1": vw1_prb,
            "vw2": vw2_prb,
            "w": w_prb,
        },
        (d_u_prb, d_uv_prb, d_v_prb, d_vw_prb, d_w_prb),
    )
    tr_qrc = TransmitterInstance(
        qrc,
        {
            "u": u_qrc,
            "uv1": uv1_qrc,
            "uv2": uv2_qrc,
            "v": v_qrc,
            "vw1": vw1_qrc,
            "vw2": vw2_qrc,
            "w": w_qrc,
        },
        (d_u_qrc, d_uv_qrc, d_v_qrc, d_vw_qrc, d_w_qrc),
    )

    pairs = {
        "p": ChoicePairInstance(f"{P}.p", p1, p2, d_p, (u_prb, u_pq)),
        "q": ChoicePairInstance(f"{P}.q", q1, q2, d_q, (w_pq, u_qrc)),
        "r": ChoicePairInstance(f"{P}.r", r1, r2, d_r, (u_prb, w_qrc, u_rs)),
        "s": ChoicePairInstance(f"{P}.s", s1, s2, d_s, (w_rs, u_sa)),
    }
    transmitters = {
        "pq": tr_pq,
        "rs": tr_rs,
        "sa": tr_sa,
        "prb": tr_prb,
        "qrc": tr_qrc,
    }
    return TripleInstance(ti, triple, pairs, transmitters)


def build_reduction(instance: ThreeDMInstance, gadget: DominatingGadget) -> ReductionOutput:
    asm = _Assembler()
    arrivals: dict = {
        (part, i): [] for part in "ABC" for i in range(instance.n)
    }
    triples = tuple(
        _emit_triple(asm, ti, tr, gadget, arrivals)
        for ti, tr in enumerate(instance.triples)
    )
    elements = []
    for part in "ABC":
        for i in range(instance.n):
            name = f"{part}{i}"
            lam = [("R", w) for w in arrivals[(part, i)]]
            f, gvid, d_e, _ = _emit_pair(
                asm, name, gadget, lam=lam, suffixes=(".f", ".g")
            )
            pair = ChoicePairInstance(
                name, f, gvid, d_e, tuple(arrivals[(part, i)])
            )
            elements.append(ElementInstance(part, i, pair))
    model = asm.model()
    v_d, d = gadget.order, gadget.d
    order = (29 * v_d + 43) * instance.m + 3 * (v_d + 2) * instance.n
    assert model.n == order, f"built {model.n} vertices, formula says {order}"
    expected = (29 * d + 7) * instance.m + (3 * d + 1) * instance.n
    return ReductionOutput(
        model,
        tuple(asm.roles),
        order,
        expected,
        gadget,
        instance,
        triples,
        tuple(elements),
    )


def standard_solution(output: ReductionOutput, matching: Iterable[int]) -> frozenset:
    """Certified solution for a perfect matching: non-tight standards on
    matched triples, tight on the rest, plus all element gadget standards."""
    chosen = set(matching)
    if not output.instance.is_perfect_matching(chosen):
        raise ValidationError("matching is not a perfect 3-dimensional matching")
    out: set[int] = set()
    for t in output.triples:
        out |= t.solution(nontight=t.index in chosen)
    for e in output.elements:
        out.update(e.pair.gadget.standard)
    assert len(out) == output.expected_solution_size
    return frozenset(out)


# --- minimal transmitter host -------------------------------------------------


@dataclass(frozen=True)
class TransmitterHost:
    """A transmitter between two choice pairs, with nothing else around: the
    smallest graph in which its local lower bound is meaningful."""

    model: IntervalModel
    roles: tuple[str, ...]
    transmitter: TransmitterInstance
    pairs: tuple[ChoicePairInstance, ChoicePairInstance]

    def outside(self) -> frozenset:
        """All vertices not in the transmitter."""
        tr = set(self.transmitter.path.values())
        for gi in self.transmitter.gadgets:
            tr.update(gi.members)
        return frozenset(range(self.model.n)) - tr


def build_transmitter_host(gadget: DominatingGadget) -> TransmitterHost:
    asm = _Assembler()
    u = asm.vertex("tr.u")
    w = asm.vertex("tr.w")
    a1, a2, d_a, _ = _emit_pair(asm, "left.", gadget, rho=[("L", u)])
    tr = _emit_between_core(asm, "tr", gadget, u, w)
    b1, b2, d_b, _ = _emit_pair(asm, "right.", gadget, lam=[("R", w)])
    model = asm.model()
    pairs = (
        ChoicePairInstance("left", a1, a2, d_a, (u,)),
        ChoicePairInstance("right", b1, b2, d_b, (w,)),
    )
    return TransmitterHost(model, tuple(asm.roles), tr, pairs)


# --- audits -------------------------------------------------------------------


def audit_reduction(output: ReductionOutput) -> list[str]:
    """Re-check every placement property the construction relies on.

    Returns human-readable violation strings; empty means the build is sound.
    """
    model = output.model
    g = build_graph(model)
    issues: list[str] = []
    left = [model.left(v) for v in range(model.n)]
    right = [model.right(v) for v in range(model.n)]

    gadgets = output.all_gadget_instances()
    member_of: dict[int, str] = {}
    for gi in gadgets:
        for v in gi.members:
            member_of[v] = gi.name

    # dominating-gadget isolation: contain all members or touch none
    for gi in gadgets:
        span_l = min(left[v] for v in gi.members)
        span_r = max(right[v] for v in gi.members)
        for v in range(model.n):
            if v in gi.members:
                continue
            if right[v] < span_l or left[v] > span_r:
                continue
            if left[v] < span_l and right[v] > span_r:
                continue
            issues.append(f"{gi.name}: interval {v} has an endpoint inside the gadget")

    # choice pairs: shape, shared gadget, and who may separate them
    for pair in output.designated_choice_pairs():
        x, y = pair.first, pair.second
        if not (left[x] < left[y] < right[x] < right[y]):
            issues.append(f"pair {pair.name}: members must overlap without nesting")
        if pair.gadget is not None:
            gl = min(left[v] for v in pair.gadget.members)
            gr = max(right[v] for v in pair.gadget.members)
            if not (left[x] < gl and gr < right[x] and left[y] < gl and gr < right[y]):
                issues.append(f"pair {pair.name}: gadget not inside both members")
        actual = {
            z
            for z in range(model.n)
            if z not in (x, y) and (z in g.adj[x]) != (z in g.adj[y])
        }
        if actual != set(pair.separators):
            issues.append(
                f"pair {pair.name}: separators {sorted(actual)} != designated "
                f"{sorted(pair.separators)}"
            )

    # transmitter path shape
    for t in output.triples:
        for tr in t.transmitters.values():
            p = tr.path
            chain = [p["u"], p["uv1"], p["uv2"], p["v"], p["vw1"], p["vw2"], p["w"]]
            for i, x in enumerate(chain):
                for j in range(i + 1, len(chain)):
                    adjacent = chain[j] in g.adj[x]
                    if adjacent != (j == i + 1):
                        issues.append(
                            f"{tr.name}: path vertices {i},{j} "
                            f"{'adjacent' if adjacent else 'not adjacent'}"
                        )

    # every non-member interval swallows at least one gadget, and
    # signatures over gadgets identify intervals up to designated pairs
    spans = [
        (
            gi.name,
            min(left[v] for v in gi.members),
            max(right[v] for v in gi.members),
        )
        for gi in gadgets
    ]
    paired: dict[int, int] = {}
    for pair in output.designated_choice_pairs():
        paired[pair.first] = pair.second
        paired[pair.second] = pair.first
    sig: dict[int, frozenset] = {}
    for v in range(model.n):
        if v in member_of:
            continue
        s = frozenset(
            name for name, sl, sr in spans if left[v] < sl and sr < right[v]
        )
        if not s:
            issues.append(f"interval {v} contains no dominating gadget")
        sig[v] = s
    by_sig: dict[frozenset, list[int]] = {}
    for v, s in sig.items():
        by_sig.setdefault(s, []).append(v)
    for s, vs in by_sig.items():
        if len(vs) == 1:
            continue
        if len(vs) == 2 and paired.get(vs[0]) == vs[1]:
            continue
        issues.append(f"intervals {vs} share gadget signature {sorted(s)}")

    return issues
