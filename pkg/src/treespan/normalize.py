"""Turn a tree t-spanner with a (t+1)-center into a shortest-paths-to-center one.

Repeatedly pick a vertex ``u`` whose tree distance to the center exceeds its
graph distance, and swap its parent edge for an edge to a neighbour ``v``
that is one step closer in the graph and already correctly placed.  The set
of violating vertices shrinks with every swap and each intermediate tree
stays a tree t-spanner with the same center.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import Center, Edge, Graph, SpanningTree, distances_from, edge_key
from .spanner import as_spanning_tree, is_t_center, is_tree_t_spanner


@dataclass(frozen=True)
class ViolationReport:
    violating: frozenset[str]
    swaps_performed: list[tuple[Edge, Edge]] = field(default_factory=list)


def violating_set(g: Graph, tree: SpanningTree, k: Center) -> frozenset[str]:
    """Vertices strictly farther from ``k`` in the tree than in ``g``."""
    dg = distances_from(g, k.vertices)
    dt = distances_from(tree.graph, k.vertices)
    return frozenset(x for x in g.vertices if dg[x] < dt[x])


def _rooted_in(tree: SpanningTree, k: Center) -> SpanningTree:
    if tree.root == k.vertices[0]:
        return tree
    return tree.rerooted(k.vertices[0])


def normalize_shortest_paths(
    g: Graph, tree: SpanningTree, stretch: int, k: Center, *, check_each_step: bool = True
) -> tuple[SpanningTree, ViolationReport]:
    """Edge-swap ``tree`` into a shortest-paths-to-``k`` tree ``stretch``-spanner.

    ``tree`` must be a tree ``stretch``-spanner of ``g`` having ``k`` as a
    ``(stretch+1)``-center; otherwise :class:`PreconditionError` is raised,
    since nothing guarantees a normalised tree exists.

    Returns the new tree and a report holding the input's violating set and
    the swaps, as ``(removed edge, added edge)``.
    """
    tree = as_spanning_tree(g, tree)
    if not is_tree_t_spanner(g, tree, stretch):
        raise PreconditionError(f"input is not a tree {stretch}-spanner")
    if not is_t_center(tree.graph, k, stretch + 1):
        raise PreconditionError(f"{k.vertices} is not a {stretch + 1}-center of the tree")

    tree = _rooted_in(tree, k)
    dg = distances_from(g, k.vertices)
    initial = violating_set(g, tree, k)
    parent = dict(tree.parent)

    swaps = []
    violating = set(initial)
    limit = g.n * (max(dg.values()) + 1)
    while violating:
        if len(swaps) > limit:
            raise AssertionError("normalisation failed to terminate")
        u = min(violating, key=lambda x: (dg[x], x))
        v = min(w for w in g.neighbors(u) if dg[w] == dg[u] - 1 and w not in violating)
        old = parent[u]
        parent[u] = v
        swaps.append((edge_key(u, old), edge_key(u, v)))
        current = SpanningTree(g, parent, tree.root)
        if check_each_step and not is_tree_t_spanner(g, current, stretch):
            raise AssertionError(f"swap {swaps[-1]} broke the spanner property")
        shrunk = set(violating_set(g, current, k))
        if len(shrunk) >= len(violating):
            raise AssertionError("violating set did not shrink")
        violating = shrunk
    result = SpanningTree(g, parent, tree.root)
    return result, ViolationReport(initial, swaps)
