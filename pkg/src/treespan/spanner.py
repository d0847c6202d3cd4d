"""Tree spanners, centers, stars and midsts.

A spanning tree ``T`` of ``G`` is a tree ``t``-spanner when every pair of
vertices at distance ``d`` in ``G`` is at distance at most ``t*d`` in ``T``;
it is enough to look at the edges of ``G``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import GraphError
from .graph import (
    Center,
    Graph,
    SpanningTree,
    components_without,
    distances_from,
    tree_diameter,
    tree_distance,
)


def as_spanning_tree(g: Graph, candidate) -> SpanningTree:
    """Coerce ``candidate`` (a tree or an edge collection) to a spanning tree of ``g``.

    Raises :class:`~treespan.errors.NotASpanningTreeError` when it is not one.
    """
    if isinstance(candidate, SpanningTree):
        if candidate.host == g:
            return candidate
        return SpanningTree.from_edges(g, candidate.edges, root=candidate.root)
    return SpanningTree.from_edges(g, candidate)


def max_stretch(g: Graph, tree: SpanningTree) -> int:
    """Largest tree distance between the endpoints of an edge of ``g`` (0 if edgeless)."""
    return max((tree_distance(tree, a, b) for a, b in g.edges), default=0)


def is_tree_t_spanner(g: Graph, candidate, stretch: int) -> bool:
    """True iff ``candidate`` is a tree ``stretch``-spanner of ``g``.

    A candidate that is not a spanning tree of ``g`` raises instead of
    returning False.
    """
    g.require_connected()
    tree = as_spanning_tree(g, candidate)
    return all(tree_distance(tree, a, b) <= stretch for a, b in g.edges)


def check_certificate(g: Graph, candidate, t: int) -> bool:
    """Polynomial NP certificate check for "tree t-spanner of diameter <= t+1".

    Accepts iff the candidate is a spanning tree of diameter at most ``t+1``
    and no two vertices at tree distance exactly ``t+1`` are adjacent in ``g``.
    Deliberately avoids :func:`is_tree_t_spanner`.
    """
    g.require_connected()
    tree = as_spanning_tree(g, candidate)
    tg = tree.graph
    for x in g.vertices:
        dist = distances_from(tg, [x])
        for y, d in dist.items():
            if d > t + 1:
                return False
            if d == t + 1 and g.has_edge(x, y):
                return False
    return True


def is_t_center(g: Graph, k: Center, t: int) -> bool:
    """Whether ``k`` is a ``t``-center of ``g``: right parity, adjacent if a pair,
    and every vertex within ``t // 2`` of it."""
    if t < 0 or len(k) != (1 if t % 2 == 0 else 2):
        return False
    if any(v not in g for v in k):
        return False
    if k.is_pair and not g.has_edge(*k.vertices):
        return False
    dist = distances_from(g, k.vertices)
    return len(dist) == g.n and max(dist.values()) <= t // 2


def _all_distances(g: Graph) -> dict[str, dict[str, int]]:
    return {v: distances_from(g, [v]) for v in g.vertices}


def find_t_centers(g: Graph, t: int) -> list[Center]:
    """All ``t``-centers of the connected graph ``g``, sorted."""
    if t < 0:
        raise ValueError("t must be non-negative")
    g.require_connected()
    if t == 0:
        return [Center.of(g.vertices[0])] if g.n == 1 else []
    if t == 1:
        return [Center(g.edges[0])] if g.n == 2 else []
    radius = t // 2
    dist = _all_distances(g)
    if t % 2 == 0:
        return [Center.of(v) for v in g.vertices if max(dist[v].values()) <= radius]
    return [
        Center((a, b))
        for a, b in g.edges
        if all(min(dist[a][x], dist[b][x]) <= radius for x in g.vertices)
    ]


def is_t_star(g: Graph, t: int) -> bool:
    """``g`` is the one-vertex graph or has a ``t``-center."""
    g.require_connected()
    return g.n == 1 or bool(find_t_centers(g, t))


def bfs_tree_from_center(g: Graph, k: Center) -> SpanningTree:
    """Breadth-first spanning tree grown from ``k``.

    Every vertex hangs from its lexicographically least neighbour one step
    closer to ``k``; a pair center contributes its own edge.
    """
    g.require_connected()
    k.check_in(g)
    dist = distances_from(g, k.vertices)
    root = k.vertices[0]
    parent = {}
    if k.is_pair:
        parent[k.vertices[1]] = root
    for v in g.vertices:
        if dist[v] == 0:
            continue
        parent[v] = min(w for w in g.neighbors(v) if dist[w] == dist[v] - 1)
    return SpanningTree(g, parent, root)


@dataclass(frozen=True)
class Midst:
    """A ``t``-midst of a path: a vertex (t odd) or a pair of consecutive vertices (t even)."""

    vertices: tuple[str, ...]
    path: tuple[str, ...]
    index: int


def _check_simple_path(path: Sequence[str]) -> tuple[str, ...]:
    path = tuple(path)
    if not path:
        raise GraphError("path is empty")
    if len(set(path)) != len(path):
        raise GraphError("path repeats a vertex")
    return path


def t_midsts(path: Sequence[str], t: int) -> list[Midst]:
    """All ``t``-midsts of ``path``, ordered from its first endpoint."""
    path = _check_simple_path(path)
    if t < 0:
        raise ValueError("t must be non-negative")
    length = len(path) - 1
    bound = (t - 1) // 2
    out = []
    if t % 2 == 1:
        for i in range(len(path)):
            if i > bound and length - i > bound:
                out.append(Midst((path[i],), path, i))
    else:
        for i in range(length):
            if i > bound and length - (i + 1) > bound:
                out.append(Midst((path[i], path[i + 1]), path, i))
    return out


def check_midst_separation(g: Graph, tree: SpanningTree, path: Sequence[str], midst: Midst, stretch: int) -> bool:
    """Every ``g``-path between the ends of ``path`` meets the tree ball of
    radius ``(stretch - 1) // 2`` around ``midst``.

    Checked by deleting that ball from ``g`` and testing whether the two
    endpoints become disconnected.
    """
    path = _check_simple_path(path)
    for a, b in zip(path, path[1:]):
        if not tree.has_edge(a, b):
            raise GraphError(f"{a}-{b} is not a tree edge; path must lie in the tree")
    if midst not in t_midsts(path, stretch):
        raise GraphError(f"{midst.vertices} is not a {stretch}-midst of the path")
    radius = (stretch - 1) // 2
    tdist = distances_from(tree.graph, midst.vertices)
    ball = {w for w, d in tdist.items() if d <= radius}
    u, v = path[0], path[-1]
    if u in ball or v in ball:
        return True
    for comp in components_without(g, ball):
        if u in comp:
            return v not in comp
    raise AssertionError("endpoint missing from every component")


def spanner_report(g: Graph, candidate, stretch: int, max_diam: int | None = None) -> dict:
    """Summary used by the command line ``verify`` command."""
    tree = as_spanning_tree(g, candidate)
    ok = is_tree_t_spanner(g, tree, stretch)
    diam = tree_diameter(tree)
    report = {
        "is_spanner": ok,
        "stretch": stretch,
        "max_edge_stretch": max_stretch(g, tree),
        "diameter": diam,
    }
    if max_diam is not None:
        report["max_diam"] = max_diam
        report["diameter_ok"] = diam <= max_diam
    report["accepted"] = ok and (max_diam is None or diam <= max_diam)
    return report


def centers_of_tree(tree: SpanningTree, t: int) -> list[Center]:
    """The ``t``-centers of the tree itself."""
    return find_t_centers(tree.graph, t)

