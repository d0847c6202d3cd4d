"""Immutable undirected simple graphs, spanning trees and centers.

Vertices are strings.  Every iteration order exposed here is lexicographic
so witnesses produced downstream are reproducible.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from .errors import DisconnectedGraphError, GraphError, NotASpanningTreeError

Edge = tuple[str, str]


def edge_key(a: str, b: str) -> Edge:
    return (a, b) if a <= b else (b, a)


def _check_label(v) -> str:
    if not isinstance(v, str) or not v or any(ch.isspace() for ch in v):
        raise GraphError(f"vertex labels must be non-empty strings without whitespace: {v!r}")
    return v


class Graph:
    """An undirected simple graph.

    Parameters
    ----------
    edges : iterable of pairs
        Repeated edges (in either orientation) are merged.
    vertices : iterable of str, optional
        Extra vertices, typically isolated ones.
    """

    def __init__(self, edges: Iterable[tuple[str, str]] = (), vertices: Iterable[str] = ()):
        adj: dict[str, set[str]] = {}
        for v in vertices:
            adj.setdefault(_check_label(v), set())
        for e in edges:
            a, b = e
            _check_label(a)
            _check_label(b)
            if a == b:
                raise GraphError(f"self-loop at {a!r}")
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        self._adj = {v: tuple(sorted(adj[v])) for v in sorted(adj)}
        self._nbrsets = {v: frozenset(ns) for v, ns in self._adj.items()}

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self._adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Sorted edges, each as ``(a, b)`` with ``a < b``."""
        return tuple((a, b) for a, ns in self._adj.items() for b in ns if a < b)

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self):
        return iter(self._adj)

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"vertex {v!r} not in graph") from None

    def neighbor_set(self, v: str) -> frozenset[str]:
        try:
            return self._nbrsets[v]
        except KeyError:
            raise GraphError(f"vertex {v!r} not in graph") from None

    def closed_neighborhood(self, v: str) -> frozenset[str]:
        return self.neighbor_set(v) | {v}

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: str, b: str) -> bool:
        return a in self._nbrsets and b in self._nbrsets[a]

    def is_connected(self) -> bool:
        if not self._adj:
            return True
        return len(distances_from(self, [next(iter(self._adj))])) == len(self._adj)

    def require_connected(self) -> None:
        if not self._adj:
            raise GraphError("graph has no vertices")
        if not self.is_connected():
            raise DisconnectedGraphError("graph is not connected")

    def induced(self, keep: Iterable[str]) -> Graph:
        keep = set(keep)
        return Graph(
            ((a, b) for a, b in self.edges if a in keep and b in keep),
            vertices=(v for v in self._adj if v in keep),
        )

    def union(self, other: Graph) -> Graph:
        return Graph(self.edges + other.edges, vertices=self.vertices + other.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Center:
    """A single vertex or an adjacent pair; stored sorted so it behaves as a set."""

    vertices: tuple[str, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) not in (1, 2) or len(set(vs)) != len(vs):
            raise GraphError(f"a center is one vertex or two distinct vertices, got {vs!r}")
        object.__setattr__(self, "vertices", tuple(sorted(vs)))

    @classmethod
    def of(cls, *vertices: str) -> Center:
        return cls(tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertices

    @property
    def is_pair(self) -> bool:
        return len(self.vertices) == 2

    def check_in(self, g: Graph) -> None:
        for v in self.vertices:
            if v not in g:
                raise GraphError(f"center vertex {v!r} not in graph")
        if self.is_pair and not g.has_edge(*self.vertices):
            raise GraphError(f"center pair {self.vertices} is not adjacent")

    def __str__(self) -> str:
        return ",".join(self.vertices)


class SpanningTree:
    """A spanning tree of ``host`` stored as a parent map.

    The constructor validates that the parent map describes a spanning tree
    whose edges all belong to ``host``; use :meth:`from_edges` to build one
    from an edge collection.
    """

    def __init__(self, host: Graph, parent: Mapping[str, str], root: str):
        if root not in host:
            raise NotASpanningTreeError(f"root {root!r} not in host graph")
        parent = dict(parent)
        if set(parent) != set(host.vertices) - {root}:
            raise NotASpanningTreeError("parent map must cover exactly the non-root vertices")
        for v, p in parent.items():
            if not host.has_edge(v, p):
                raise NotASpanningTreeError(f"tree edge {v}-{p} is not an edge of the host")
        depth = {root: 0}
        for v in host.vertices:
            chain = []
            w = v
            while w not in depth:
                chain.append(w)
                w = parent[w]
                if len(chain) > len(parent):
                    raise NotASpanningTreeError("parent map contains a cycle")
            d = depth[w]
            for x in reversed(chain):
                d += 1
                depth[x] = d
        self.host = host
        self.root = root
        self.parent = parent
        self.depth = depth

    @classmethod
    def from_edges(cls, host: Graph, edges: Iterable[tuple[str, str]], root: str | None = None) -> SpanningTree:
        edges = {edge_key(a, b) for a, b in edges}
        if host.n == 0:
            raise NotASpanningTreeError("host graph is empty")
        if root is None:
            root = host.vertices[0]
        if len(edges) != host.n - 1:
            raise NotASpanningTreeError(
                f"a spanning tree of {host.n} vertices needs {host.n - 1} edges, got {len(edges)}"
            )
        adj: dict[str, list[str]] = {v: [] for v in host.vertices}
        for a, b in edges:
            if not host.has_edge(a, b):
                raise NotASpanningTreeError(f"edge {a}-{b} is not an edge of the host")
            adj[a].append(b)
            adj[b].append(a)
        if root not in adj:
            raise NotASpanningTreeError(f"root {root!r} not in host graph")
        parent = {}
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    queue.append(y)
        if len(seen) != host.n:
            raise NotASpanningTreeError("edge set does not connect the host's vertices")
        return cls(host, parent, root)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(edge_key(v, p) for v, p in self.parent.items())

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def graph(self) -> Graph:
        """The tree itself as a :class:`Graph` on the host's vertex set."""
        return Graph(self.edges, vertices=self.host.vertices)

    def has_edge(self, a: str, b: str) -> bool:
        return edge_key(a, b) in self.edges

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self.graph.neighbors(v)

    def rerooted(self, root: str) -> SpanningTree:
        return SpanningTree.from_edges(self.host, self.edges, root=root)

    def distance(self, x: str, y: str) -> int:
        return tree_distance(self, x, y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.host == other.host and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"SpanningTree(n={self.host.n}, root={self.root!r})"


def distances_from(g: Graph, sources: Iterable[str]) -> dict[str, int]:
    """Multi-source breadth-first distances from the set ``sources``.

    Unreachable vertices are absent from the result.
    """
    sources = list(sources)
    if not sources:
        raise GraphError("source set is empty")
    dist = {}
    for s in sources:
        if s not in g:
            raise GraphError(f"source vertex {s!r} not in graph")
        dist[s] = 0
    queue = deque(dist)
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dx
                queue.append(y)
    return dist


def components_without(g: Graph, removed: Iterable[str]) -> list[tuple[str, ...]]:
    """Connected components of ``g`` after deleting ``removed``.

    Each component is a sorted tuple; components are ordered by their
    smallest vertex.
    """
    removed = set(removed)
    for v in removed:
        if v not in g:
            raise GraphError(f"vertex {v!r} not in graph")
    seen = set(removed)
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def tree_distance(t: SpanningTree, x: str, y: str) -> int:
    """Length of the unique ``x``-``y`` path in ``t``."""
    depth = t.depth
    if x not in depth or y not in depth:
        raise GraphError(f"vertex not in tree: {x if x not in depth else y!r}")
    d = 0
    parent = t.parent
    while depth[x] > depth[y]:
        x = parent[x]
        d += 1
    while depth[y] > depth[x]:
        y = parent[y]
        d += 1
    while x != y:
        x = parent[x]
        y = parent[y]
        d += 2
    return d


def tree_path(t: SpanningTree, x: str, y: str) -> list[str]:
    """The vertex sequence of the tree path from ``x`` to ``y``."""
    depth, parent = t.depth, t.parent
    if x not in depth or y not in depth:
        raise GraphError("vertex not in tree")
    left, right = [x], [y]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return left + right[-2::-1]


def tree_diameter(t: SpanningTree) -> int:
    """Longest path length in ``t``, by the two-sweep farthest-vertex method."""
    tg = t.graph
    d1 = distances_from(tg, [t.root])
    far = max(d1, key=lambda v: (d1[v], v))
    d2 = distances_from(tg, [far])
    return max(d2.values())


def eccentricity(g: Graph, sources: Iterable[str]) -> int:
    """Largest distance from the set ``sources`` to any vertex of the connected graph ``g``."""
    dist = distances_from(g, sources)
    if len(dist) != g.n:
        raise DisconnectedGraphError("graph is not connected")
    return max(dist.values())
