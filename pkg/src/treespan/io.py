"""Text formats: edge lists, rooted trees, JSON, DOT and DIMACS CNF.

Edge-list format::

    # comment
    a b          one edge per line
    n c          an isolated vertex

A tree file is an edge list whose first non-comment line is ``root <label>``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphError, ReductionError
from .graph import Center, Graph, SpanningTree


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_edge_list(text: str) -> Graph:
    edges, isolated = [], []
    for lineno, tok in _content_lines(text):
        if len(tok) == 2 and tok[0] == "n":
            # "n x" is ambiguous with an edge n-x; an edge from a vertex called
            # "n" must be written "x n".
            isolated.append(tok[1])
        elif len(tok) == 2:
            edges.append((tok[0], tok[1]))
        else:
            raise GraphError(f"line {lineno}: expected 'u v' or 'n label', got {' '.join(tok)!r}")
    return Graph(edges, vertices=isolated)


def _edge_lines(g: Graph) -> list[str]:
    lines = []
    for a, b in g.edges:
        # keep a vertex named "n" out of first position so it is not read as a declaration
        lines.append(f"{b} {a}" if a == "n" else f"{a} {b}")
    lines.extend(f"n {v}" for v in g.vertices if g.degree(v) == 0)
    return sorted(lines)


def emit_edge_list(g: Graph) -> str:
    return "".join(line + "\n" for line in _edge_lines(g))


def parse_tree(text: str, host: Graph) -> SpanningTree:
    """Parse a tree file against ``host``; the tree need not list isolated vertices."""
    root = None
    body = []
    for lineno, tok in _content_lines(text):
        if root is None and tok[0] == "root":
            if len(tok) != 2:
                raise GraphError(f"line {lineno}: malformed root line")
            root = tok[1]
            continue
        body.append(" ".join(tok))
    if root is None:
        raise GraphError("tree file lacks a 'root <label>' line")
    tg = parse_edge_list("\n".join(body))
    return SpanningTree.from_edges(host, tg.edges, root=root)


def emit_tree(t: SpanningTree) -> str:
    return f"root {t.root}\n" + emit_edge_list(t.graph)


def graph_to_json(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def graph_from_json(data: dict) -> Graph:
    try:
        return Graph((tuple(e) for e in data["edges"]), vertices=data["vertices"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed graph JSON: {exc}") from None


def tree_to_json(t: SpanningTree) -> dict:
    return {"root": t.root, "vertices": list(t.host.vertices), "edges": [list(e) for e in t.sorted_edges()]}


def tree_from_json(data: dict, host: Graph) -> SpanningTree:
    return SpanningTree.from_edges(host, (tuple(e) for e in data["edges"]), root=data["root"])


def dumps(obj) -> str:
    """Canonical JSON (sorted keys) so re-serialisation is stable."""
    return json.dumps(obj, sort_keys=True, indent=2)


def _q(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, tree: SpanningTree | None = None, center: Center | None = None, name: str = "G") -> str:
    """Graphviz DOT for ``g``; tree edges are drawn bold and center vertices filled."""
    lines = [f"graph {_q(name)} {{"]
    for v in g.vertices:
        attrs = " [style=filled, fillcolor=gray]" if center is not None and v in center else ""
        lines.append(f"  {_q(v)}{attrs};")
    for a, b in g.edges:
        attrs = ""
        if tree is not None:
            attrs = " [penwidth=3]" if tree.has_edge(a, b) else " [style=dashed]"
        lines.append(f"  {_q(a)} -- {_q(b)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        return graph_from_json(json.loads(text))
    return parse_edge_list(text)


def read_tree(path, host: Graph) -> SpanningTree:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        return tree_from_json(json.loads(text), host)
    return parse_tree(text, host)


# --- DIMACS CNF -------------------------------------------------------------

def parse_dimacs(text: str):
    """Parse DIMACS CNF into a :class:`~treespan.gadgets.CnfInstance`.

    Variable ``i`` is named ``x{i}``.  Every clause must have exactly three
    literals.
    """
    from .gadgets import CnfInstance

    header = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ReductionError(f"line {lineno}: invalid problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ReductionError(f"line {lineno}: invalid problem line {line!r}") from None
            continue
        if header is None:
            raise ReductionError(f"line {lineno}: clause before 'p cnf' header")
        try:
            tokens.extend(int(x) for x in line.split())
        except ValueError:
            raise ReductionError(f"line {lineno}: non-integer literal") from None
    if header is None:
        raise ReductionError("missing 'p cnf' header")
    nvars, nclauses = header
    clauses, cur = [], []
    for lit in tokens:
        if lit == 0:
            if len(cur) != 3:
                raise ReductionError(f"clause {len(clauses) + 1} has {len(cur)} literals, expected 3")
            clauses.append(tuple((f"x{abs(x)}", x > 0) for x in cur))
            cur = []
        else:
            if abs(lit) > nvars:
                raise ReductionError(f"literal {lit} exceeds declared variable count {nvars}")
            cur.append(lit)
    if cur:
        raise ReductionError("last clause is not terminated by 0")
    if len(clauses) != nclauses:
        raise ReductionError(f"header declares {nclauses} clauses, found {len(clauses)}")
    return CnfInstance(tuple(clauses))


def emit_dimacs(instance) -> str:
    index = {}
    for var in instance.variables:
        if var.startswith("x") and var[1:].isdigit():
            index[var] = int(var[1:])
    nxt = max(index.values(), default=0)
    for var in instance.variables:
        if var not in index:
            nxt += 1
            index[var] = nxt
    lines = [f"p cnf {max(index.values(), default=0)} {len(instance.clauses)}"]
    for clause in instance.clauses:
        lines.append(" ".join(str(index[v] if pos else -index[v]) for v, pos in clause) + " 0")
    return "\n".join(lines) + "\n"


def read_cnf(path):
    return parse_dimacs(Path(path).read_text())
