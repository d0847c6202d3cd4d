"""Deciding tree 3-spanners of diameter at most 4, plus the trivial stretch 0 and 1 cases.

A graph has such a tree exactly when some hub vertex ``u`` has the property
that every component of ``G - N[u]`` lies inside the neighbourhood of a
single neighbour of ``u``.  The witness tree joins ``u`` to all its
neighbours and hangs each component from its covering neighbour.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, SpanningTree, components_without, tree_diameter
from .spanner import is_tree_t_spanner


@dataclass(frozen=True)
class Diam4Witness:
    hub: str
    assignment: dict[tuple[str, ...], str]
    tree: SpanningTree

    def to_json(self) -> dict:
        return {
            "hub": self.hub,
            "assignment": [{"component": list(q), "cover": v} for q, v in self.assignment.items()],
        }


def _cover_components(g: Graph, u: str) -> dict[tuple[str, ...], str] | None:
    assignment = {}
    nbrs = g.neighbors(u)
    for comp in components_without(g, g.closed_neighborhood(u)):
        need = set(comp)
        for v in nbrs:
            if need <= g.neighbor_set(v):
                assignment[comp] = v
                break
        else:
            return None
    return assignment


def decide_tree3_diam4(g: Graph) -> Diam4Witness | None:
    """Return a witness for a tree 3-spanner of diameter <= 4, or None.

    Hubs are tried in lexicographic order and each component takes the
    lexicographically least covering neighbour.
    """
    g.require_connected()
    for u in g.vertices:
        assignment = _cover_components(g, u)
        if assignment is None:
            continue
        parent = {x: u for x in g.neighbors(u)}
        for comp, v in assignment.items():
            parent.update((x, v) for x in comp)
        return Diam4Witness(u, assignment, SpanningTree(g, parent, u))
    return None


def decide_small_t(g: Graph, stretch: int) -> SpanningTree | None:
    """Tree ``stretch``-spanner of diameter <= stretch+1 for stretch 0 or 1.

    Only ``g`` itself can be a tree 1-spanner, so ``g`` must be a tree.
    """
    if stretch not in (0, 1):
        raise ValueError("decide_small_t handles stretch 0 and 1 only")
    g.require_connected()
    if g.m != g.n - 1:
        return None
    tree = SpanningTree.from_edges(g, g.edges)
    if is_tree_t_spanner(g, tree, stretch) and tree_diameter(tree) <= stretch + 1:
        return tree
    return None
