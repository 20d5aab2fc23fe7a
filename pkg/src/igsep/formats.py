"""Text and JSON formats for models, graphs, 3DM instances and solutions.

Interval model text: a header line ``n`` followed by one line per interval
``id left right``; coordinates are integers or rationals written ``p/q``.
Edge lists use the classic ``p edge n m`` header with 1-indexed ``e u v``
lines and ``c`` comments. Parse failures carry the offending line number.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Graph
from .intervals import Interval, IntervalModel
from .reductions import ReductionOutput, ThreeDMInstance


class FormatError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_coord(token: str, lineno: int = 0):
    try:
        if "/" in token:
            f = Fraction(token)
            return int(f) if f.denominator == 1 else f
        return int(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(lineno, f"bad coordinate {token!r}") from None


def format_coord(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def load_model(text: str) -> IntervalModel:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError(0, "empty model file")
    lineno, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise FormatError(lineno, f"expected vertex count, got {header!r}") from None
    if len(lines) - 1 != n:
        raise FormatError(lineno, f"expected {n} interval lines, got {len(lines) - 1}")
    intervals = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(lineno, "expected: id left right")
        try:
            vid = int(parts[0])
        except ValueError:
            raise FormatError(lineno, f"bad id {parts[0]!r}") from None
        intervals.append(
            Interval(vid, parse_coord(parts[1], lineno), parse_coord(parts[2], lineno))
        )
    return IntervalModel(intervals)


def dump_model(model: IntervalModel) -> str:
    lines = [str(model.n)]
    for iv in model.intervals:
        lines.append(f"{iv.id} {format_coord(iv.left)} {format_coord(iv.right)}")
    return "\n".join(lines) + "\n"


def model_to_json(model: IntervalModel) -> dict:
    return {
        "n": model.n,
        "intervals": [
            {"id": iv.id, "l": format_coord(iv.left), "r": format_coord(iv.right)}
            for iv in model.intervals
        ],
    }


def model_from_json(obj) -> IntervalModel:
    try:
        return IntervalModel(
            Interval(int(e["id"]), parse_coord(str(e["l"])), parse_coord(str(e["r"])))
            for e in obj["intervals"]
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(0, f"bad model object: {exc}") from None


def load_edge_list(text: str) -> Graph:
    n = None
    edges = []
    declared = 0
    for lineno, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise FormatError(lineno, "expected: p edge <n> <m>")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(lineno, "bad p line") from None
        elif parts[0] == "e":
            if n is None:
                raise FormatError(lineno, "e line before p line")
            if len(parts) != 3:
                raise FormatError(lineno, "expected: e u v")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(lineno, "bad edge endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(lineno, f"edge ({u},{v}) out of range 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(lineno, f"unknown line type {parts[0]!r}")
    if n is None:
        raise FormatError(0, "missing p line")
    if len(edges) != declared:
        raise FormatError(0, f"header declares {declared} edges, found {len(edges)}")
    return Graph(n, edges)


def dump_edge_list(g: Graph, comments=()) -> str:
    edges = g.edges()
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def load_3dm(text: str) -> ThreeDMInstance:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError(0, "empty instance file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(lineno, "expected: n m")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(lineno, "bad header") from None
    if len(lines) - 1 != m:
        raise FormatError(lineno, f"expected {m} triples, got {len(lines) - 1}")
    triples = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(lineno, "expected: a b c")
        try:
            t = tuple(int(x) for x in parts)
        except ValueError:
            raise FormatError(lineno, "bad triple") from None
        if any(not 0 <= x < n for x in t):
            raise FormatError(lineno, f"triple {t} out of range 0..{n - 1}")
        triples.append(t)
    return ThreeDMInstance(n, tuple(triples))


def dump_3dm(instance: ThreeDMInstance) -> str:
    lines = [f"{instance.n} {instance.m}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in instance.triples)
    return "\n".join(lines) + "\n"


def load_vertex_set(text: str) -> frozenset:
    out = set()
    for lineno, line in _content_lines(text):
        for tok in line.split():
            try:
                out.add(int(tok))
            except ValueError:
                raise FormatError(lineno, f"bad vertex id {tok!r}") from None
    return frozenset(out)


def dump_vertex_set(s) -> str:
    return " ".join(str(v) for v in sorted(s)) + "\n"


def reduction_roles_json(output: ReductionOutput) -> dict:
    return {str(v): role for v, role in enumerate(output.roles)}


def reduction_manifest(output: ReductionOutput) -> dict:
    inst, gad = output.instance, output.gadget
    return {
        "kind": gad.kind.value,
        "n": inst.n,
        "m": inst.m,
        "gadget_order": gad.order,
        "gadget_d": gad.d,
        "order": output.order,
        "order_formula": (29 * gad.order + 43) * inst.m + 3 * (gad.order + 2) * inst.n,
        "solution_size": output.expected_solution_size,
        "solution_formula": (29 * gad.d + 7) * inst.m + (3 * gad.d + 1) * inst.n,
    }
