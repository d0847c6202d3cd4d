"""Command line interface.

Exit codes: 0 found / yes, 1 not found / no, 2 invalid input, 3 budget exhausted.
Every subcommand is a thin wrapper around one library call.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import io
from .diam4 import decide_tree3_diam4
from .errors import BudgetExhausted, GraphError, PreconditionError, ReductionError
from .gadgets import TruthAssignment, build_f, build_h, counterexample, lift_tree, tree_from_assignment
from .graph import Center, Graph, SpanningTree
from .normalize import normalize_shortest_paths
from .oracle import SearchBudget, brute_force_sat, brute_force_spanner, sps_tree_search
from .spanner import find_t_centers, is_t_star, spanner_report

EXIT_CODES = {"found": 0, "not-found": 1, "invalid-input": 2, "budget-exhausted": 3}


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)
    graph: Graph | None = None
    tree: SpanningTree | None = None
    center: Center | None = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def render(self, fmt: str) -> str:
        if fmt == "json":
            body = {"status": self.status, **self.payload}
            if self.graph is not None:
                body["graph"] = io.graph_to_json(self.graph)
            if self.tree is not None:
                body["tree"] = io.tree_to_json(self.tree)
            return io.dumps(body) + "\n"
        if fmt == "dot":
            host = self.graph if self.graph is not None else (self.tree.host if self.tree else None)
            if host is None:
                return io.dumps({"status": self.status, **self.payload}) + "\n"
            return io.to_dot(host, self.tree, self.center)
        header = [f"# status: {self.status}"]
        header += [f"# {key}: {json.dumps(value, sort_keys=True)}" for key, value in sorted(self.payload.items())]
        text = "\n".join(header) + "\n"
        if self.graph is not None:
            text += io.emit_edge_list(self.graph)
        if self.tree is not None:
            if self.graph is not None:
                text += "# --- tree ---\n" + "".join(f"# {line}\n" for line in io.emit_tree(self.tree).splitlines())
            else:
                text += io.emit_tree(self.tree)
        return text


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _center(text: str | None) -> Center | None:
    if text is None:
        return None
    parts = [p for p in text.split(",") if p]
    return Center(tuple(parts))


def _budget(args) -> SearchBudget:
    base = SearchBudget()
    return SearchBudget(
        max_trees=base.max_trees,
        max_nodes=args.max_nodes if args.max_nodes is not None else base.max_nodes,
        timeout=args.timeout if args.timeout is not None else base.timeout,
    )


def _parse_assignment(text: str) -> dict[str, bool]:
    values = {}
    for item in text.split(","):
        name, _, val = item.partition("=")
        if val.strip().lower() not in ("0", "1", "true", "false", "t", "f"):
            raise ReductionError(f"bad assignment item {item!r}; use name=0 or name=1")
        values[name.strip()] = val.strip().lower() in ("1", "true", "t")
    return values


def _write(path, text):
    Path(path).write_text(text)


def cmd_verify(args) -> CommandResult:
    g = io.read_graph(args.graph)
    tree = io.read_tree(args.tree, g)
    report = spanner_report(g, tree, args.t, args.max_diam)
    return CommandResult("found" if report["accepted"] else "not-found", report)


def cmd_tstar(args) -> CommandResult:
    g = io.read_graph(args.graph)
    centers = find_t_centers(g, args.t)
    star = is_t_star(g, args.t)
    payload = {"t": args.t, "is_t_star": star, "centers": [list(c.vertices) for c in centers]}
    return CommandResult("found" if star else "not-found", payload)


def cmd_decide3d4(args) -> CommandResult:
    g = io.read_graph(args.graph)
    witness = decide_tree3_diam4(g)
    if witness is None:
        return CommandResult("not-found", {"admits_tree3_spanner_diam4": False})
    if args.emit_tree:
        _write(args.emit_tree, io.emit_tree(witness.tree))
    payload = {"admits_tree3_spanner_diam4": True, **witness.to_json()}
    return CommandResult("found", payload, tree=witness.tree, center=Center.of(witness.hub))


def cmd_normalize(args) -> CommandResult:
    g = io.read_graph(args.graph)
    tree = io.read_tree(args.tree, g)
    k = _center(args.center)
    out, report = normalize_shortest_paths(g, tree, args.t, k)
    payload = {
        "violating": sorted(report.violating),
        "swaps": [[list(old), list(new)] for old, new in report.swaps_performed],
    }
    return CommandResult("found", payload, tree=out, center=k)


def cmd_gen(args) -> CommandResult:
    if args.kind == "counterexample":
        if args.t is None:
            raise _UsageError("gen counterexample needs --t")
        g, tree, k = counterexample(args.t)
        payload = {"t": args.t, "center": list(k.vertices), "n": g.n, "m": g.m}
    else:
        if args.cnf is None:
            raise _UsageError("gen reduction needs --cnf")
        instance = io.read_cnf(args.cnf)
        f = build_f(instance)
        g, tree, k = f.graph, None, f.center
        if args.assignment:
            tree = tree_from_assignment(f, TruthAssignment(_parse_assignment(args.assignment)))
        if args.t is not None:
            g, tail = build_h(f, args.t)
            k = tail.center
            if tree is not None:
                tree = lift_tree(f, tree, args.t)
        payload = {"n": g.n, "m": g.m, "center": list(k.vertices), "filtered_clauses": list(f.filtered)}
        if args.t is not None:
            payload["t"] = args.t
    if args.emit_graph:
        _write(args.emit_graph, io.emit_edge_list(g))
    if args.emit_tree and tree is not None:
        _write(args.emit_tree, io.emit_tree(tree))
    return CommandResult("found", payload, graph=g, tree=tree, center=k)


def cmd_sat(args) -> CommandResult:
    instance = io.read_cnf(args.cnf)
    a = brute_force_sat(instance)
    if a is None:
        return CommandResult("not-found", {"satisfiable": False})
    payload = {
        "satisfiable": True,
        "values": {x: a.values[x] for x in sorted(a.values)},
        "witness": {str(j): x for j, x in sorted(a.witness.items())},
    }
    return CommandResult("found", payload)


def cmd_oracle(args) -> CommandResult:
    g = io.read_graph(args.graph)
    budget = _budget(args)
    if args.engine == "spanner":
        tree = brute_force_spanner(g, args.t, args.max_diam, budget)
        center = None
    else:
        k = _center(args.center)
        candidates = [k] if k is not None else find_t_centers(g, args.t + 1)
        tree = center = None
        for cand in candidates:
            tree = sps_tree_search(g, cand, args.t, budget)
            if tree is not None:
                center = cand
                break
    payload = {"t": args.t}
    if args.max_diam is not None:
        payload["max_diam"] = args.max_diam
    if tree is None:
        return CommandResult("not-found", payload)
    if center is not None:
        payload["center"] = list(center.vertices)
    return CommandResult("found", payload, tree=tree, center=center)


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("el", "json", "dot"), default="el")
    p = _Parser(prog="treespan", description="Tree t-spanners of diameter at most t+1.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", parents=[fmt], help="check a tree against a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--tree", required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--max-diam", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("tstar", parents=[fmt], help="list the t-centers of a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_tstar)

    s = sub.add_parser("decide3d4", parents=[fmt], help="tree 3-spanner of diameter <= 4")
    s.add_argument("--graph", required=True)
    s.add_argument("--emit-tree")
    s.set_defaults(func=cmd_decide3d4)

    s = sub.add_parser("normalize", parents=[fmt], help="make a spanner shortest-paths to its center")
    s.add_argument("--graph", required=True)
    s.add_argument("--tree", required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--center", required=True)
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("gen", parents=[fmt], help="generate counterexamples and reduction graphs")
    s.add_argument("kind", choices=("counterexample", "reduction"))
    s.add_argument("--t", type=int)
    s.add_argument("--cnf")
    s.add_argument("--assignment", help="e.g. x1=0,x2=1,x3=1; also emits the matching tree")
    s.add_argument("--emit-graph")
    s.add_argument("--emit-tree")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("sat", parents=[fmt], help="brute-force 3-SAT")
    s.add_argument("--cnf", required=True)
    s.set_defaults(func=cmd_sat)

    s = sub.add_parser("oracle", parents=[fmt], help="exhaustive spanner search")
    s.add_argument("engine", choices=("spanner", "sps"))
    s.add_argument("--graph", required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--max-diam", type=int)
    s.add_argument("--center")
    s.add_argument("--max-nodes", type=int)
    s.add_argument("--timeout", type=float)
    s.set_defaults(func=cmd_oracle)
    return p


def run(argv: list[str]) -> tuple[CommandResult, str]:
    """Execute one command; returns the result and its rendering."""
    fmt = "el"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        result = args.func(args)
    except BudgetExhausted as exc:
        print(f"treespan: {exc}", file=sys.stderr)
        result = CommandResult("budget-exhausted", {"reason": exc.reason, "nodes": exc.nodes})
    except (_UsageError, GraphError, PreconditionError, ReductionError, ValueError, OSError) as exc:
        print(f"treespan: {exc}", file=sys.stderr)
        result = CommandResult("invalid-input", {"error": str(exc)})
    return result, result.render(fmt)


def main(argv=None) -> int:
    result, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
