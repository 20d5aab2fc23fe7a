"""Command-line interface.

Every command is deterministic given its flags; all randomness flows from
an explicit ``--seed``. Exit codes: 0 = yes/pass, 1 = no/fail,
2 = usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes, families, formats, fpt, reductions
from .graphs import build_graph, power_model
from .decomposition import build_path_decomposition, dump_events
from .intervals import RANDOM_STYLES, ValidationError, random_model


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(args):
    if getattr(args, "model", None):
        return build_graph(formats.load_model(_read(args.model)))
    if getattr(args, "edges", None):
        return formats.load_edge_list(_read(args.edges))
    raise ValidationError("provide --model or --edges")


_PROBLEMS = {k.value: k for k in codes.ProblemKind}


def _emit(args, payload: dict, text_lines):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_gen_random(args):
    model = random_model(args.n, args.seed, args.style, window=args.window)
    _write(args.out, formats.dump_model(model))
    return 0


def cmd_gen_family(args):
    fam = families.make_family(families.FamilySpec(args.family, args.size))
    if isinstance(fam, families.ChordalWitnessFamily):
        black = " ".join(str(v) for v in sorted(fam.black))
        _write(args.out, formats.dump_edge_list(fam.graph, comments=[f"black {black}"]))
    elif hasattr(fam, "adj"):
        _write(args.out, formats.dump_edge_list(fam))
    else:
        _write(args.out, formats.dump_model(fam))
    return 0


def cmd_gen_reduction(args):
    kind = _PROBLEMS[args.kind]
    gadget = reductions.gadget_for(kind)
    instance = formats.load_3dm(_read(args.instance))
    output = reductions.build_reduction(instance, gadget)
    solution = None
    if args.matching:
        matching = sorted(formats.load_vertex_set(_read(args.matching)))
        solution = reductions.standard_solution(output, matching)
    wrote_file = False
    if args.model_out:
        _write(args.model_out, formats.dump_model(output.model))
        wrote_file = True
    if args.roles_out:
        _write(args.roles_out, json.dumps(formats.reduction_roles_json(output), indent=1))
        wrote_file = True
    if args.manifest_out:
        _write(args.manifest_out, json.dumps(formats.reduction_manifest(output), indent=1))
        wrote_file = True
    if args.solution_out:
        if solution is None:
            raise ValidationError("--solution-out needs --matching")
        _write(args.solution_out, formats.dump_vertex_set(solution))
        wrote_file = True
    if not wrote_file:
        bundle = {
            "model": formats.model_to_json(output.model),
            "roles": formats.reduction_roles_json(output),
            "manifest": formats.reduction_manifest(output),
        }
        if solution is not None:
            bundle["solution"] = sorted(solution)
        print(json.dumps(bundle, sort_keys=True))
    return 0


def cmd_transform(args):
    g = _load_graph(args)
    out = {"f1": reductions.f1, "f2": reductions.f2, "f3": reductions.f3}[args.op](g)
    _write(args.out, formats.dump_edge_list(out))
    return 0


def cmd_power(args):
    model = formats.load_model(_read(args.model))
    _write(args.out, formats.dump_model(power_model(model, args.d)))
    return 0


def cmd_decompose(args):
    model = formats.load_model(_read(args.model))
    if args.power:
        model = power_model(model, args.power)
    _write(args.out, dump_events(build_path_decomposition(model)))
    return 0


def cmd_solve(args):
    kind = _PROBLEMS[args.problem]
    if args.algo == "fpt":
        if args.k is None:
            raise ValidationError("--algo fpt requires --k")
        if kind is codes.ProblemKind.MD:
            if not args.model:
                raise ValidationError("the metric-dimension solver needs --model")
            model = formats.load_model(_read(args.model))
            res = fpt.fpt_metric_dimension(model, args.k)
            if res.found:
                _emit(
                    args,
                    {"size": res.size, "witness": sorted(res.witness)},
                    [f"size {res.size}", "witness " + " ".join(map(str, sorted(res.witness)))],
                )
                if args.witness_out:
                    _write(args.witness_out, formats.dump_vertex_set(res.witness))
                return 0
            label = "bag bound" if res.reason == "bag-bound" else "k exceeded"
            _emit(args, {"no": label}, [f"no ({label})"])
            return 1
        # LD/ID/OLD are solved by budgeted search behind the n <= 2^k bound
        g = _load_graph(args)
        if g.n > 2 ** args.k:
            _emit(args, {"no": "n exceeds 2^k"}, ["no (n exceeds 2^k)"])
            return 1
        res = codes.brute_force_min(g, kind, k_max=min(args.k, g.n), threads=args.threads)
    else:
        g = _load_graph(args)
        k_max = min(args.k, g.n) if args.k is not None else None
        res = codes.brute_force_min(g, kind, k_max=k_max, threads=args.threads)
    if res.found:
        _emit(
            args,
            {"size": res.size, "witness": sorted(res.witness)},
            [f"size {res.size}", "witness " + " ".join(map(str, sorted(res.witness)))],
        )
        if args.witness_out:
            _write(args.witness_out, formats.dump_vertex_set(res.witness))
        return 0
    label = "k exceeded" if res.reason == "budget-exceeded" else res.reason
    _emit(args, {"no": label}, [f"no ({label})"])
    return 1


def cmd_verify(args):
    kind = _PROBLEMS[args.problem]
    g = _load_graph(args)
    s = formats.load_vertex_set(_read(args.set))
    bad = [v for v in s if not 0 <= v < g.n]
    if bad:
        raise ValidationError(f"solution vertices {bad} out of range")
    viol = codes.first_violation(g, kind, s)
    if viol is None:
        _emit(args, {"result": "pass"}, ["pass"])
        return 0
    if viol[0] == "undominated":
        _emit(args, {"result": "fail", "undominated": viol[1]}, [f"fail undominated {viol[1]}"])
    else:
        _emit(
            args,
            {"result": "fail", "pair": [viol[1], viol[2]]},
            [f"fail pair {viol[1]} {viol[2]}"],
        )
    return 1


def cmd_trace_dp(args):
    model = formats.load_model(_read(args.model))
    res = fpt.fpt_metric_dimension(model, args.k, collect_trace=True)
    lines = ["event,bag,pairs,configs"]
    for row in res.trace or ():
        lines.append(",".join(str(x) for x in row))
    _write(args.out, "\n".join(lines) + "\n")
    return 0 if res.found else 1


def _add_io(sub, model=True, edges=True):
    if model:
        sub.add_argument("--model", help="interval model file (- for stdin)")
    if edges:
        sub.add_argument("--edges", help="edge list file (- for stdin)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="igsep")
    sp = p.add_subparsers(dest="command", required=True)

    g = sp.add_parser("gen-random", help="random interval model")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--style", choices=list(RANDOM_STYLES), default="uniform-endpoints")
    g.add_argument("--window", type=int, default=4)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen_random)

    g = sp.add_parser("gen-family", help="named fixture family")
    g.add_argument("--family", choices=list(families.FAMILIES), required=True)
    g.add_argument("--size", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen_family)

    g = sp.add_parser("gen-reduction", help="hard instance from a 3DM instance")
    g.add_argument("--kind", choices=["ld", "id", "old"], required=True)
    g.add_argument("--instance", required=True)
    g.add_argument("--matching")
    g.add_argument("--model-out")
    g.add_argument("--roles-out")
    g.add_argument("--manifest-out")
    g.add_argument("--solution-out")
    g.set_defaults(func=cmd_gen_reduction)

    g = sp.add_parser("transform", help="apply f1/f2/f3 to a graph")
    g.add_argument("--op", choices=["f1", "f2", "f3"], required=True)
    _add_io(g)
    g.add_argument("--out")
    g.set_defaults(func=cmd_transform)

    g = sp.add_parser("power", help="distance power of a model")
    g.add_argument("--model", required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_power)

    g = sp.add_parser("decompose", help="path decomposition events")
    g.add_argument("--model", required=True)
    g.add_argument("--power", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_decompose)

    g = sp.add_parser("solve", help="minimum solution search")
    g.add_argument("--problem", choices=sorted(_PROBLEMS), required=True)
    g.add_argument("--algo", choices=["fpt", "brute"], default="brute")
    g.add_argument("--k", type=int)
    g.add_argument("--threads", type=int, default=1)
    g.add_argument("--witness-out")
    g.add_argument("--json", action="store_true")
    _add_io(g)
    g.set_defaults(func=cmd_solve)

    g = sp.add_parser("verify", help="check a vertex set against a problem")
    g.add_argument("--problem", choices=sorted(_PROBLEMS), required=True)
    g.add_argument("--set", required=True)
    g.add_argument("--json", action="store_true")
    _add_io(g)
    g.set_defaults(func=cmd_verify)

    g = sp.add_parser("trace-dp", help="per-event configuration counts as CSV")
    g.add_argument("--model", required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_trace_dp)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValidationError, formats.FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
