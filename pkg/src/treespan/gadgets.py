"""Explicit constructions: counterexample families and the 3-SAT reductions.

Vertex names are structured so that gadgets can be read back:

* ``u``, ``v``, ``hu``, ``hu'``, ``hv``, ``hv'`` form the fixed six-vertex path,
* variables keep their own names,
* ``x2@c1`` is the copy of variable ``x2`` inside clause 1 and ``q3@c1``
  the third covering vertex of clause 1 (clauses are numbered from 1 in
  input order),
* ``r2@tail``, ``p1_1@tail``, ``p2_1@tail`` belong to the stretch-``t`` tail.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError, ReductionError
from .graph import Center, Edge, Graph, SpanningTree, edge_key, tree_diameter
from .normalize import normalize_shortest_paths, violating_set
from .spanner import as_spanning_tree, is_t_center, is_tree_t_spanner

U, V = "u", "v"
H_PATH = ("hu", "hu'", U, V, "hv'", "hv")
RESERVED = frozenset(H_PATH)

_M = np.array(
    [
        [1, 1, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, 1],
        [1, 1, 0, 0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0, 0, 1, 1],
        [1, 0, 1, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 0, 1, 0, 1],
    ],
    dtype=np.int8,
)
_M.setflags(write=False)


def matrix_m() -> np.ndarray:
    """The 6x8 clause/cover incidence matrix (a fresh writable copy)."""
    return _M.copy()


# --- 3-SAT instances ---------------------------------------------------------

Literal = tuple[str, bool]
Clause = tuple[Literal, Literal, Literal]


def _check_variable(name) -> str:
    if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
        raise ReductionError(f"invalid variable name {name!r}")
    if "@" in name or name in RESERVED:
        raise ReductionError(f"variable name {name!r} collides with gadget vertex names")
    return name


@dataclass(frozen=True)
class CnfInstance:
    """A 3-SAT instance.

    ``clauses`` holds triples of ``(variable, positive)`` literals.  A clause
    containing a variable and its negation is legal; the reduction ignores it.
    ``variables`` defaults to the sorted set of variables used.
    """

    clauses: tuple[Clause, ...]
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        clauses = []
        for j, c in enumerate(self.clauses, 1):
            lits = tuple((_check_variable(var), bool(pos)) for var, pos in c)
            if len(lits) != 3:
                raise ReductionError(f"clause {j} has {len(lits)} literals, expected 3")
            if len(set(lits)) != 3:
                raise ReductionError(f"clause {j} repeats a literal")
            clauses.append(lits)
        used = {var for c in clauses for var, _ in c}
        variables = tuple(sorted(set(map(_check_variable, self.variables)) | used))
        object.__setattr__(self, "clauses", tuple(clauses))
        object.__setattr__(self, "variables", variables)

    @classmethod
    def from_ints(cls, clauses: Iterable[Iterable[int]]) -> CnfInstance:
        """Build from DIMACS-style signed integers; variable ``i`` becomes ``x{i}``."""
        return cls(tuple(tuple((f"x{abs(x)}", x > 0) for x in c) for c in clauses))

    @staticmethod
    def is_tautology(clause: Clause) -> bool:
        return len({var for var, _ in clause}) < 3

    def retained(self) -> list[tuple[int, Clause]]:
        """``(index, clause)`` for clauses with three distinct variables."""
        return [(j, c) for j, c in enumerate(self.clauses, 1) if not self.is_tautology(c)]

    def evaluate(self, values: Mapping[str, bool]) -> bool:
        return all(any(values[var] == pos for var, pos in c) for c in self.clauses)


@dataclass(frozen=True)
class TruthAssignment:
    """Variable values plus, optionally, a satisfying variable per clause index."""

    values: Mapping[str, bool]
    witness: Mapping[int, str] | None = None


def _witness_for(clause: Clause, values: Mapping[str, bool]) -> str | None:
    for var, pos in clause:
        if values[var] == pos:
            return var
    return None


# --- f(I) --------------------------------------------------------------------

@dataclass(frozen=True)
class ClauseGadget:
    index: int
    clause: Clause
    g: tuple[str, ...]     # [x1, x1@c, x2, x2@c, x3, x3@c]
    q: tuple[str, ...]     # q1@c .. q8@c

    @property
    def side(self) -> tuple[str, ...]:
        return self.g[1::2]

    def side_anchor(self, i: int) -> str:
        """``u`` or ``v``: where the i-th clause copy is attached (0-based)."""
        return U if self.clause[i][1] else V


@dataclass(frozen=True)
class ReductionGraph:
    instance: CnfInstance
    graph: Graph
    clause_index: dict[int, ClauseGadget]
    filtered: tuple[int, ...]
    h_vertices: tuple[str, ...] = H_PATH

    @property
    def center(self) -> Center:
        return Center.of(U, V)


def build_f(instance: CnfInstance) -> ReductionGraph:
    """Graph whose tree 4-spanners of diameter <= 5 encode satisfying assignments."""
    edges: list[Edge] = list(zip(H_PATH, H_PATH[1:]))
    for x in instance.variables:
        edges += [(x, U), (x, V)]
    gadgets = {}
    for j, clause in instance.retained():
        g = []
        for var, _ in clause:
            g += [var, f"{var}@c{j}"]
        q = tuple(f"q{k}@c{j}" for k in range(1, 9))
        gadget = ClauseGadget(j, clause, tuple(g), q)
        rows, cols = np.nonzero(_M)
        edges += [(g[r], q[c]) for r, c in zip(rows, cols)]
        edges += [(side, gadget.side_anchor(i)) for i, side in enumerate(gadget.side)]
        edges += list(zip(q, q[1:]))
        gadgets[j] = gadget
    filtered = tuple(j for j, c in enumerate(instance.clauses, 1) if CnfInstance.is_tautology(c))
    graph = Graph(edges, vertices=H_PATH)
    return ReductionGraph(instance, graph, gadgets, filtered)


def tree_from_assignment(f: ReductionGraph, a: TruthAssignment) -> SpanningTree:
    """The tree 4-spanner of diameter <= 5 built from a satisfying assignment.

    Each variable hangs from ``u`` when true and from ``v`` when false; each
    clause's covering vertices hang from its satisfying variable and that
    variable's clause copy.
    """
    values = a.values
    missing = [x for x in f.instance.variables if x not in values]
    if missing:
        raise ReductionError(f"assignment lacks variables {missing}")
    edges = list(zip(H_PATH, H_PATH[1:]))
    edges += [(x, U if values[x] else V) for x in f.instance.variables]
    for j, gadget in f.clause_index.items():
        chosen = (a.witness or {}).get(j)
        if chosen is None:
            chosen = _witness_for(gadget.clause, values)
        if chosen is None:
            raise ReductionError(f"assignment does not satisfy clause {j}")
        names = [var for var, _ in gadget.clause]
        pos = names.index(chosen) if chosen in names else None
        if pos is None or values[chosen] != gadget.clause[pos][1]:
            raise ReductionError(f"witness {chosen!r} does not satisfy clause {j}")
        edges += [(side, gadget.side_anchor(i)) for i, side in enumerate(gadget.side)]
        for r in (2 * pos, 2 * pos + 1):
            edges += [(gadget.g[r], gadget.q[c]) for c in np.flatnonzero(_M[r])]
    return SpanningTree.from_edges(f.graph, edges, root=U)


def _check_small_spanner(f: ReductionGraph, tree: SpanningTree) -> SpanningTree:
    tree = as_spanning_tree(f.graph, tree)
    if not is_tree_t_spanner(f.graph, tree, 4):
        raise PreconditionError("tree is not a tree 4-spanner of f(I)")
    if tree_diameter(tree) > 5:
        raise PreconditionError("tree has diameter above 5")
    if not is_t_center(tree.graph, f.center, 5):
        raise PreconditionError("{u, v} is not a 5-center of the tree")
    return tree


def assignment_from_tree(f: ReductionGraph, tree: SpanningTree) -> TruthAssignment:
    """Read a satisfying assignment off a tree 4-spanner of diameter <= 5.

    A tree that is not yet shortest-paths to ``{u, v}`` is normalised first.
    ``x`` is true iff the edge ``xu`` is in the (normalised) tree.
    """
    tree = _check_small_spanner(f, tree)
    if violating_set(f.graph, tree, f.center):
        tree, _ = normalize_shortest_paths(f.graph, tree, 4, f.center)
    values = {}
    for x in f.instance.variables:
        to_u, to_v = tree.has_edge(x, U), tree.has_edge(x, V)
        if to_u == to_v:
            raise AssertionError(f"variable {x} must hang from exactly one of u, v")
        values[x] = to_u
    witness = {}
    for j, clause in enumerate(f.instance.clauses, 1):
        chosen = _witness_for(clause, values)
        if chosen is None:
            raise AssertionError(f"extracted assignment falsifies clause {j}")
        witness[j] = chosen
    return TruthAssignment(values, witness)


# --- h(f(I), t) --------------------------------------------------------------

@dataclass(frozen=True)
class TailGadget:
    """The path ``u = r1 .. r_{t-2} = v`` with two pendant paths at its middle."""

    t: int
    path: tuple[str, ...]
    p1: tuple[str, ...]
    p2: tuple[str, ...]
    center: Center
    edges: tuple[Edge, ...] = field(repr=False, default=())


def build_tail(t: int) -> TailGadget:
    if t < 5:
        raise ReductionError("the tail gadget needs t >= 5")
    path = (U,) + tuple(f"r{i}@tail" for i in range(2, t - 2)) + (V,)
    a1, a2 = (t - 1) // 2, t // 2     # 1-based attachment indices
    length = (t + 1) // 2
    p1 = (path[a1 - 1],) + tuple(f"p1_{i}@tail" for i in range(1, length + 1))
    p2 = (path[a2 - 1],) + tuple(f"p2_{i}@tail" for i in range(1, length + 1))
    center = Center.of(path[a1 - 1]) if a1 == a2 else Center.of(path[a1 - 1], path[a2 - 1])
    edges = tuple(edge_key(a, b) for seq in (path, p1, p2) for a, b in zip(seq, seq[1:]))
    return TailGadget(t, path, p1, p2, center, edges)


def build_h(f: ReductionGraph, t: int) -> tuple[Graph, TailGadget]:
    """``f``'s graph plus the tail gadget, sharing exactly ``u`` and ``v``."""
    tail = build_tail(t)
    return f.graph.union(Graph(tail.edges)), tail


def lift_tree(f: ReductionGraph, tree: SpanningTree, t: int) -> SpanningTree:
    """Replace the edge ``uv`` of a small spanner by the whole tail gadget."""
    tree = as_spanning_tree(f.graph, tree)
    if not tree.has_edge(U, V):
        raise ReductionError("the tree must contain the edge uv")
    tree = _check_small_spanner(f, tree)
    h, tail = build_h(f, t)
    edges = (tree.edges - {edge_key(U, V)}) | set(tail.edges)
    return SpanningTree.from_edges(h, edges, root=tail.center.vertices[0])


def project_tree(f: ReductionGraph, big: SpanningTree, t: int) -> SpanningTree:
    """Inverse of :func:`lift_tree`: restrict to ``f`` and put ``uv`` back.

    ``big`` must be a tree ``t``-spanner of ``h(f, t)`` of diameter <= t+1;
    it is normalised toward the tail center first when necessary.
    """
    h, tail = build_h(f, t)
    big = as_spanning_tree(h, big)
    if not is_tree_t_spanner(h, big, t):
        raise PreconditionError(f"tree is not a tree {t}-spanner of h(f, {t})")
    if tree_diameter(big) > t + 1:
        raise PreconditionError(f"tree has diameter above {t + 1}")
    if not is_t_center(big.graph, tail.center, t + 1):
        raise PreconditionError("the tail center is not a center of the tree")
    if violating_set(h, big, tail.center):
        big, _ = normalize_shortest_paths(h, big, t, tail.center)
    if not all(big.has_edge(a, b) for a, b in zip(tail.path, tail.path[1:])):
        raise AssertionError("normalised tree must contain the tail path")
    keep = set(f.graph.vertices)
    edges = {e for e in big.edges if e[0] in keep and e[1] in keep} | {edge_key(U, V)}
    return SpanningTree.from_edges(f.graph, edges, root=U)


# --- counterexample families -------------------------------------------------

def _tree_minus(g: Graph, removed: Iterable[tuple[str, str]], root: str) -> SpanningTree:
    removed = {edge_key(a, b) for a, b in removed}
    if not removed <= set(g.edges):
        raise AssertionError("removal list names a non-edge")
    return SpanningTree.from_edges(g, set(g.edges) - removed, root=root)


def counterexample_odd(t: int) -> tuple[Graph, SpanningTree, Center]:
    """Two ``(t+2)``-cycles through the edge ``uv`` with chords and side paths.

    It has a tree ``t``-spanner with ``(t+2)``-center ``{u, v}`` but none
    with a ``(t+1)``-center, and none that is shortest-paths to its center.
    """
    if t < 3 or t % 2 == 0:
        raise ReductionError("counterexample_odd needs an odd t >= 3")
    x = {i: f"x{i}" for i in range(1, t + 1)}
    y = {i: f"y{i}" for i in range(1, t + 1)}
    w = {0: U, t - 1: x[1], **{i: f"w{i}" for i in range(1, t - 1)}}
    z = {0: V, t - 1: y[1], **{i: f"z{i}" for i in range(1, t - 1)}}
    edges = [(U, V), (U, x[1]), (x[t], V), (V, y[1]), (y[t], U), (x[1], x[t]), (y[1], y[t])]
    edges += [(x[i], x[i + 1]) for i in range(1, t)]
    edges += [(y[i], y[i + 1]) for i in range(1, t)]
    edges += [(w[i], w[i + 1]) for i in range(t - 1)]
    edges += [(z[i], z[i + 1]) for i in range(t - 1)]
    g = Graph(edges)
    lo, hi = t // 2, (t + 1) // 2
    removed = [(V, x[t]), (U, y[t]), (x[hi], x[hi + 1]), (y[hi], y[hi + 1]), (w[lo], w[hi]), (z[lo], z[hi])]
    return g, _tree_minus(g, removed, U), Center.of(U, V)


def counterexample_even(t: int) -> tuple[Graph, SpanningTree, Center]:
    """Two ``(t+2)``-cycles through ``u`` with chords and a connecting path.

    Same role as :func:`counterexample_odd`, with the single-vertex
    ``(t+2)``-center ``u``.
    """
    if t < 2 or t % 2 == 1:
        raise ReductionError("counterexample_even needs an even t >= 2")
    x = {i: f"x{i}" for i in range(1, t + 2)}
    y = {i: f"y{i}" for i in range(1, t + 2)}
    w = {1: x[1], t: y[1], **{i: f"w{i}" for i in range(2, t)}}
    edges = [(U, x[1]), (x[t + 1], U), (U, y[1]), (y[t + 1], U), (x[1], x[t + 1]), (y[1], y[t + 1])]
    edges += [(x[i], x[i + 1]) for i in range(1, t + 1)]
    edges += [(y[i], y[i + 1]) for i in range(1, t + 1)]
    edges += [(w[i], w[i + 1]) for i in range(1, t)]
    g = Graph(edges)
    h = t // 2
    removed = [(U, x[t + 1]), (U, y[t + 1]), (x[h + 1], x[h + 2]), (y[h + 1], y[h + 2]), (w[h], w[h + 1])]
    return g, _tree_minus(g, removed, U), Center.of(U)


def counterexample(t: int) -> tuple[Graph, SpanningTree, Center]:
    """Dispatch on the parity of ``t``."""
    return counterexample_odd(t) if t % 2 else counterexample_even(t)


def violator(t: int) -> str:
    """The vertex adjacent to the center in the graph but at tree distance 2 from it."""
    return f"x{t}" if t % 2 else f"x{t + 1}"
