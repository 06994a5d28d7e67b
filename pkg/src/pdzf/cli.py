"""Command line surface with stable JSON output.

Every subcommand except ``gen`` reads an edge list from standard input
(or ``--graph FILE``) and writes one JSON object to standard output:
schema marker, command echo, a 12-hex digest of the canonical edge list,
the per-command payload, and a trailing ``runtime_ms`` field, the only
one allowed to vary between identical runs.  ``gen`` writes edge-list
text so it can be piped straight back in.  Exit status is 0 on success,
2 on any input problem, 3 when a guard stops an enumeration; the
environment variable PDZF_GUARD_N overrides the enumeration guards.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from .bounds import audit
from .constructions import apex_over, family_labels, family_names, generate
from .decomposition import (
    check_apex_terminal,
    compose_boundary_pd,
    compose_pendant_zf,
    tree_pd_parallel,
    tree_split,
)
from .errors import GuardExceededError, PdzfError
from .forts import DEFAULT_FORT_GUARD, enumerate_forts, minimum_violated_fort
from .graph import Graph, VertexSet, from_edge_list, to_edge_list
from .propagation import (
    DEFAULT_TERMINAL_CAP,
    closure_mask,
    dominated_mask,
    enumerate_terminal_sets,
    pd_final_mask,
    pd_observe,
    zf_closure,
)
from .solver import (
    DEFAULT_ORACLE_GUARD,
    brute_force_min,
    reduction_pd_number,
    restricted_pd_number,
    restricted_zf_number,
    spread,
    z_restricted_single,
)

_METHODS = {"pd": ("cg", "oracle", "reduction"), "zf": ("cg", "oracle"), "dom": ("oracle",)}


def _enum_guard(default: int) -> int:
    env = os.environ.get("PDZF_GUARD_N")
    if env is None:
        return default
    return int(env)


def _parse_set(text: str | None, graph: Graph) -> VertexSet:
    if not text:
        return graph.vertex_set()
    return graph.vertex_set(int(part) for part in text.split(","))


def _load_graph(args: argparse.Namespace) -> Graph:
    path = getattr(args, "graph", None)
    if path:
        with open(path, "r", encoding="utf-8") as handle:
            return from_edge_list(handle.read())
    return from_edge_list(sys.stdin.read())


def _digest(graph: Graph) -> str:
    return hashlib.sha256(to_edge_list(graph).encode()).hexdigest()[:12]


def _jsonable(value):
    if isinstance(value, VertexSet):
        return sorted(value)
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (tuple, list, set, frozenset)):
        items = [_jsonable(v) for v in value]
        return sorted(items) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _result_payload(res) -> dict:
    return {
        "value": res.value,
        "witness": sorted(res.witness),
        "method": res.method,
        "cuts_added": res.cuts_added,
        "nodes": res.nodes,
    }


def _cmd_solve(args: argparse.Namespace) -> tuple[Graph, dict]:
    graph = _load_graph(args)
    if args.method not in _METHODS[args.mode]:
        raise ValueError(f"method {args.method!r} does not apply to mode {args.mode!r}")
    x = _parse_set(args.x, graph)
    if args.method == "oracle":
        res = brute_force_min(graph, x, args.mode, guard=_enum_guard(DEFAULT_ORACLE_GUARD))
    elif args.method == "reduction":
        res = reduction_pd_number(graph, x)
    elif args.mode == "pd":
        res = restricted_pd_number(graph, x, min_forts=args.min_forts)
    else:
        res = restricted_zf_number(graph, x, min_forts=args.min_forts)
    return graph, {"parameter": args.mode, **_result_payload(res)}


def _cmd_trace(args: argparse.Namespace) -> tuple[Graph, dict]:
    graph = _load_graph(args)
    x = _parse_set(args.x, graph)
    trace = pd_observe(graph, x) if args.mode == "pd" else zf_closure(graph, x)
    return graph, {
        "mode": args.mode,
        "initial": sorted(trace.initial),
        "dominated": sorted(trace.dominated),
        "rounds": [[list(force) for force in rnd] for rnd in trace.rounds],
        "final": sorted(trace.final),
        "feasible": len(trace.final) == graph.n,
    }


def _cmd_forts(args: argparse.Namespace) -> tuple[Graph, dict]:
    graph = _load_graph(args)
    if args.x is None:
        forts = enumerate_forts(graph, guard=_enum_guard(DEFAULT_FORT_GUARD))
        return graph, {"count": len(forts), "forts": [sorted(f.members) for f in forts]}
    x = _parse_set(args.x, graph)
    final = (
        pd_final_mask(graph.adj, x.mask)
        if args.mode == "pd"
        else closure_mask(graph.adj, x.mask)
    )
    fort = minimum_violated_fort(graph, VertexSet.from_mask(graph.n, final))
    return graph, {"mode": args.mode, "fort": sorted(fort.members), "size": len(fort.members)}


def _cmd_gen(args: argparse.Namespace) -> None:
    if args.family == "apex_over":
        base = from_edge_list(sys.stdin.read())
        graph = apex_over(base, _parse_set(args.t, base))
        labels = {}
    else:
        if args.t:
            raise ValueError("--t only applies to apex_over")
        graph = generate(args.family, tuple(args.params))
        labels = family_labels(args.family, graph)
    for v in sorted(labels):
        sys.stdout.write(f"# label {v} {labels[v]}\n")
    sys.stdout.write(to_edge_list(graph))


def _cmd_tree_pd(args: argparse.Namespace) -> tuple[Graph, dict]:
    tree = _load_graph(args)
    vertex = None if args.split == "auto" else int(args.split)
    if tree.n <= 2:
        res = tree_pd_parallel(tree, vertex, jobs=args.jobs)
        return tree, {**_result_payload(res), "split": None, "parts": []}
    split = tree_split(tree, vertex, jobs=args.jobs)
    parts = [
        {
            "vertices": sorted(part.index.to_old),
            "anchored": part.anchored.value,
            "free": part.free.value,
            "deleted": part.deleted.value,
            "role": part.role,
        }
        for part in split.parts
    ]
    return tree, {**_result_payload(split.result()), "split": split.vertex, "parts": parts}


def _read_spec(args: argparse.Namespace) -> dict:
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as handle:
            return json.load(handle)
    return json.loads(sys.stdin.read())


def _cmd_compose(args: argparse.Namespace) -> tuple[Graph, dict]:
    spec = _read_spec(args)
    base = from_edge_list(spec["base"])
    if args.kind == "pendant":
        attachments = tuple(
            (from_edge_list(a["graph"]), a["root"], a["at"]) for a in spec["attachments"]
        )
        comp = compose_pendant_zf(
            base,
            base.vertex_set(spec["x"]),
            attachments,
            cap=spec.get("cap", DEFAULT_TERMINAL_CAP),
        )
        payload = {
            **_result_payload(comp.result),
            "parts": [p.value for p in comp.parts],
            "placements": [list(p) for p in comp.placements],
            "glued": to_edge_list(comp.graph),
        }
    elif args.kind == "boundary":
        bound = compose_boundary_pd(
            base,
            base.vertex_set(spec["v1"]),
            base.vertex_set(spec["w1"]),
            base.vertex_set(spec["w2"]),
        )
        payload = {
            "value": bound.value,
            "witness": sorted(bound.witness),
            "parts": [p.value for p in bound.parts],
        }
    else:
        report = check_apex_terminal(
            base,
            base.vertex_set(spec["x"]),
            base.vertex_set(spec["t"]),
            cap=spec.get("cap", DEFAULT_TERMINAL_CAP),
        )
        payload = {
            "apex": report.apex,
            "covered": report.covered,
            "touched": report.touched,
            "forces_apex": report.forces_apex,
            **{f"solved_{k}": v for k, v in _result_payload(report.result).items()},
        }
    return base, payload


def _cmd_bounds(args: argparse.Namespace) -> tuple[Graph, dict]:
    graph = _load_graph(args)
    x = _parse_set(args.x, graph)
    reports = audit(graph, x, jobs=args.jobs)
    return graph, {
        "bounds": [
            {
                "name": r.name,
                "lhs": _jsonable(r.lhs),
                "rhs": _jsonable(r.rhs),
                "holds": r.holds,
                "tight": r.tight,
                "context": _jsonable(r.context),
            }
            for r in reports
        ]
    }


def _cmd_terminals(args: argparse.Namespace) -> tuple[Graph, dict]:
    graph = _load_graph(args)
    x = _parse_set(args.x, graph)
    sets = enumerate_terminal_sets(graph, x, args.cap)
    ordered = sorted(sorted(s) for s in sets)
    return graph, {"count": len(ordered), "terminal_sets": ordered}


def _cmd_spread(args: argparse.Namespace) -> tuple[Graph, dict]:
    graph = _load_graph(args)
    res = z_restricted_single(graph, args.vertex)
    return graph, {
        "vertex": args.vertex,
        "spread": spread(graph, args.vertex),
        **_result_payload(res),
    }


def _cmd_check(args: argparse.Namespace) -> tuple[Graph, dict]:
    graph = _load_graph(args)
    witness = _parse_set(args.witness, graph)
    x = _parse_set(args.x, graph)
    full = (1 << graph.n) - 1
    if args.mode == "pd":
        feasible = pd_final_mask(graph.adj, witness.mask) == full
    elif args.mode == "zf":
        feasible = closure_mask(graph.adj, witness.mask) == full
    else:
        feasible = dominated_mask(graph.adj, witness.mask) == full
    contains_x = x.issubset(witness)
    return graph, {
        "mode": args.mode,
        "size": len(witness),
        "feasible": feasible,
        "contains_x": contains_x,
        "ok": feasible and contains_x,
    }


def _add_graph_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", help="edge list file (default: standard input)")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdzf",
        description="Exact restricted power domination and zero forcing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimum feasible superset of X")
    _add_graph_arg(p)
    p.add_argument("--mode", choices=("pd", "zf", "dom"), default="pd")
    p.add_argument("--x", help="comma-separated required vertices")
    p.add_argument("--method", choices=("cg", "oracle", "reduction"), default="cg")
    p.add_argument("--min-forts", action="store_true", help="separate minimum forts")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("trace", help="propagation trace of a set")
    _add_graph_arg(p)
    p.add_argument("--mode", choices=("pd", "zf"), default="pd")
    p.add_argument("--x", help="comma-separated initial vertices")
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("forts", help="all forts, or the minimum fort violated by --x")
    _add_graph_arg(p)
    p.add_argument("--mode", choices=("pd", "zf"), default="pd")
    p.add_argument("--x", help="failed set; omit to enumerate all forts")
    p.set_defaults(handler=_cmd_forts)

    p = sub.add_parser("gen", help="write a family graph as an edge list")
    p.add_argument("family", help=f"one of: {', '.join(family_names())}, apex_over")
    p.add_argument("params", nargs="*", type=int, help="family parameters")
    p.add_argument("--t", help="apex_over: neighborhood of the new vertex")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("tree-pd", help="tree power domination by splitting")
    _add_graph_arg(p)
    p.add_argument("--split", default="auto", help="split vertex id, or auto")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_tree_pd)

    p = sub.add_parser("compose", help="composition rules over JSON descriptors")
    p.add_argument("kind", choices=("pendant", "boundary", "apex"))
    p.add_argument("--spec", help="JSON descriptor file (default: standard input)")
    p.set_defaults(handler=_cmd_compose)

    p = sub.add_parser("bounds", help="evaluate the applicable bounds")
    _add_graph_arg(p)
    p.add_argument("--audit", action="store_true", help="run the full audit (default)")
    p.add_argument("--x", help="comma-separated required vertices")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("terminals", help="enumerate terminal sets of a forcing set")
    _add_graph_arg(p)
    p.add_argument("--x", help="comma-separated forcing set")
    p.add_argument("--cap", type=int, default=DEFAULT_TERMINAL_CAP)
    p.set_defaults(handler=_cmd_terminals)

    p = sub.add_parser("spread", help="forcing value anchored at one vertex")
    _add_graph_arg(p)
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(handler=_cmd_spread)

    p = sub.add_parser("check", help="verify a witness set")
    _add_graph_arg(p)
    p.add_argument("--mode", choices=("pd", "zf", "dom"), default="pd")
    p.add_argument("--witness", required=True, help="comma-separated witness set")
    p.add_argument("--x", help="required vertices the witness must contain")
    p.set_defaults(handler=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.handler is _cmd_gen:
            _cmd_gen(args)
            return 0
        graph, payload = args.handler(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PdzfError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = {
        "schema": 1,
        "command": args.command,
        "input": _digest(graph),
        **payload,
        "runtime_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    print(json.dumps(doc))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
