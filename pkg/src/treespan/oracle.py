"""Exhaustive ground-truth searches.

Three engines, each exact within a :class:`SearchBudget`:

* spanning-tree enumeration by edge inclusion/exclusion, optionally pruned
  by a stretch and a diameter bound (the pruning is sound because tree
  distances inside a finished component never change);
* a search over the shortest-paths-to-``K`` spanning trees, which is complete
  for tree t-spanners with (t+1)-center ``K``;
* truth-table SAT for tiny 3-SAT instances.

Running out of budget raises :class:`~treespan.errors.BudgetExhausted`; it is
never reported as "no solution".
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import BudgetExhausted
from .gadgets import CnfInstance, TruthAssignment
from .graph import Center, Graph, SpanningTree, distances_from, tree_diameter
from .spanner import is_tree_t_spanner

MAX_SAT_VARIABLES = 20


@dataclass(frozen=True)
class SearchBudget:
    max_trees: int = 10**6
    max_nodes: int = 10**7
    timeout: float = 60.0


class _Meter:
    def __init__(self, budget: SearchBudget | None):
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self.trees = 0
        self.deadline = time.monotonic() + self.budget.timeout

    def _exhausted(self, reason):
        return BudgetExhausted(reason, self.nodes, self.trees)

    def node(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise self._exhausted("max_nodes")
        if not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise self._exhausted("timeout")

    def tree(self):
        self.trees += 1
        if self.trees > self.budget.max_trees:
            raise self._exhausted("max_trees")


def _constrained_trees(g: Graph, stretch, max_diam, meter: _Meter) -> Iterator[list[tuple[int, int]]]:
    """Yield spanning trees of ``g`` (as index-pair edge lists) meeting the bounds.

    Edges are decided in sorted order, include before exclude.  Including an
    edge merges two components and fixes every distance across them, which
    is where both bounds are checked.  Excluding an edge is allowed only if
    the not-yet-excluded edges still connect the graph.
    """
    verts = g.vertices
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[a], idx[b]) for a, b in g.edges]
    adj = [[False] * n for _ in range(n)]
    alive = [0] * n
    for a, b in edges:
        adj[a][b] = adj[b][a] = True
        alive[a] |= 1 << b
        alive[b] |= 1 << a
    full = (1 << n) - 1
    dist = [[0] * n for _ in range(n)]
    comp = list(range(n))
    members = [[i] for i in range(n)]
    chosen: list[tuple[int, int]] = []
    m = len(edges)

    def still_connected():
        seen = frontier = 1
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= alive[low.bit_length() - 1]
                f ^= low
            frontier = reach & ~seen
            seen |= frontier
        return seen == full

    def rec(e):
        meter.node()
        if len(chosen) == n - 1:
            meter.tree()
            yield list(chosen)
            return
        if e == m:
            return
        a, b = edges[e]
        ca, cb = comp[a], comp[b]
        if ca != cb:
            A, B = members[ca], members[cb]
            ok = True
            for x in A:
                dxa = dist[x][a] + 1
                row = adj[x]
                for y in B:
                    d = dxa + dist[b][y]
                    if (max_diam is not None and d > max_diam) or (
                        stretch is not None and row[y] and d > stretch
                    ):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                for x in A:
                    dxa = dist[x][a] + 1
                    for y in B:
                        dist[x][y] = dist[y][x] = dxa + dist[b][y]
                for y in B:
                    comp[y] = ca
                members[ca] = A + B
                chosen.append((a, b))
                yield from rec(e + 1)
                chosen.pop()
                members[ca] = A
                for y in B:
                    comp[y] = cb
        alive[a] &= ~(1 << b)
        alive[b] &= ~(1 << a)
        # inside one component the forest already joins a and b
        if ca == cb or still_connected():
            yield from rec(e + 1)
        alive[a] |= 1 << b
        alive[b] |= 1 << a

    if n == 1:
        meter.tree()
        yield []
        return
    yield from rec(0)


def _trees(g: Graph, stretch, max_diam, budget) -> Iterator[SpanningTree]:
    g.require_connected()
    meter = _Meter(budget)
    verts = g.vertices
    for edges in _constrained_trees(g, stretch, max_diam, meter):
        yield SpanningTree.from_edges(g, ((verts[a], verts[b]) for a, b in edges), root=verts[0])


def enumerate_spanning_trees(g: Graph, budget: SearchBudget | None = None) -> Iterator[SpanningTree]:
    """Every spanning tree of the connected graph ``g`` exactly once, in a fixed order."""
    return _trees(g, None, None, budget)


def iter_spanners(
    g: Graph, stretch: int | None, max_diam: int | None = None, budget: SearchBudget | None = None
) -> Iterator[SpanningTree]:
    """All spanning trees that are tree ``stretch``-spanners of diameter <= ``max_diam``.

    Either bound may be None.
    """
    return _trees(g, stretch, max_diam, budget)


def brute_force_spanner(
    g: Graph, stretch: int | None, max_diam: int | None = None, budget: SearchBudget | None = None
) -> SpanningTree | None:
    """First tree found by :func:`iter_spanners`, or None when none exists."""
    tree = next(iter_spanners(g, stretch, max_diam, budget), None)
    if tree is not None:
        assert stretch is None or is_tree_t_spanner(g, tree, stretch)
        assert max_diam is None or tree_diameter(tree) <= max_diam
    return tree


def sps_tree_search(g: Graph, k: Center, stretch: int, budget: SearchBudget | None = None) -> SpanningTree | None:
    """Search the shortest-paths-to-``k`` spanning trees for a tree ``stretch``-spanner.

    ``k`` must have the parity of a ``(stretch+1)``-center (a vertex when
    ``stretch`` is odd, an adjacent pair when it is even).  A returned tree
    has ``k`` as a ``(stretch+1)``-center; None certifies that no tree
    ``stretch``-spanner with ``(stretch+1)``-center ``k`` exists at all,
    normalised or not.

    The search proceeds one distance layer at a time.  Once every vertex
    closer to ``k`` has its parent, a vertex's choice interacts only with
    its graph neighbours in the same layer, so each layer splits into
    independent pieces that are solved separately.
    """
    g.require_connected()
    k.check_in(g)
    if len(k) != (1 if stretch % 2 else 2):
        raise ValueError(f"a {stretch + 1}-center must be {'a vertex' if stretch % 2 else 'an adjacent pair'}")
    meter = _Meter(budget)
    dist = distances_from(g, k.vertices)
    depth = max(dist.values())
    if depth > (stretch + 1) // 2:
        return None
    layers = [[] for _ in range(depth + 1)]
    for v in g.vertices:
        layers[dist[v]].append(v)

    root = k.vertices[0]
    parent: dict[str, str] = {}
    td: dict[str, dict[str, int]] = {root: {root: 0}}
    if k.is_pair:
        other = k.vertices[1]
        if stretch < 1:
            return None
        parent[other] = root
        td[root][other] = 1
        td[other] = {other: 0, root: 1}
    placed = list(layers[0])

    def layer_pieces(layer):
        inside = set(layer)
        seen = set()
        pieces = []
        for s in layer:
            if s in seen:
                continue
            seen.add(s)
            order = [s]
            for x in order:
                for y in g.neighbors(x):
                    if y in inside and y not in seen:
                        seen.add(y)
                        order.append(y)
            pieces.append(order)
        return pieces

    def piece_solutions(order, dom, d):
        assign: dict[str, str] = {}

        def bt(i):
            if i == len(order):
                yield dict(assign)
                return
            x = order[i]
            same = [y for y in g.neighbors(x) if y in assign]
            for p in dom[x]:
                meter.node()
                tp = td[p]
                if all(tp[assign[y]] + 2 <= stretch for y in same):
                    assign[x] = p
                    yield from bt(i + 1)
                    del assign[x]

        return bt(0)

    def layer_solutions(pieces, dom, d, i=0, acc=None):
        acc = acc or {}
        if i == len(pieces):
            yield acc
            return
        for sol in piece_solutions(pieces[i], dom, d):
            yield from layer_solutions(pieces, dom, d, i + 1, {**acc, **sol})

    def solve(d):
        if d > depth:
            return True
        layer = layers[d]
        dom = {}
        for x in layer:
            below = [y for y in g.neighbors(x) if dist[y] == d - 1]
            cands = [p for p in below if all(td[p][y] + 1 <= stretch for y in below)]
            if not cands:
                return False
            dom[x] = cands
        pieces = layer_pieces(layer)
        # pieces are independent: one without solutions sinks the whole layer
        if any(next(piece_solutions(piece, dom, d), None) is None for piece in pieces):
            return False
        for sol in layer_solutions(pieces, dom, d):
            for i, x in enumerate(layer):
                p = sol[x]
                tp = td[p]
                row = {y: tp[y] + 1 for y in placed}
                for x2 in layer[:i]:
                    row[x2] = td[p][sol[x2]] + 2
                row[x] = 0
                for y, dy in row.items():
                    if y != x:
                        td[y][x] = dy
                td[x] = row
                parent[x] = p
            placed.extend(layer)
            if solve(d + 1):
                return True
            del placed[-len(layer):]
            for x in layer:
                del td[x]
                del parent[x]
            for row in td.values():
                for x in layer:
                    row.pop(x, None)
        return False

    if not solve(1):
        return None
    tree = SpanningTree(g, parent, root)
    assert is_tree_t_spanner(g, tree, stretch)
    return tree


def brute_force_sat(instance: CnfInstance) -> TruthAssignment | None:
    """First satisfying assignment in truth-table order, with one witness variable per clause."""
    variables = instance.variables
    if len(variables) > MAX_SAT_VARIABLES:
        raise ValueError(f"brute-force SAT is capped at {MAX_SAT_VARIABLES} variables, got {len(variables)}")
    for bits in itertools.product((False, True), repeat=len(variables)):
        values = dict(zip(variables, bits))
        witness = {}
        for j, clause in enumerate(instance.clauses, 1):
            var = next((var for var, pos in clause if values[var] == pos), None)
            if var is None:
                break
            witness[j] = var
        else:
            return TruthAssignment(values, witness)
    return None
