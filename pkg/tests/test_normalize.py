import itertools

import pytest

from conftest import random_connected_graph
from treespan import (
    Center,
    Graph,
    PreconditionError,
    SpanningTree,
    bfs_tree_from_center,
    build_f,
    distances_from,
    find_t_centers,
    is_t_center,
    is_tree_t_spanner,
    iter_spanners,
    normalize_shortest_paths,
    violating_set,
)
from treespan.gadgets import CnfInstance, counterexample_even, counterexample_odd, violator
from treespan.graph import edge_key


def kite():
    g = Graph([("k", "p"), ("k", "q"), ("k", "r"), ("q", "r")])
    tree = SpanningTree.from_edges(g, [("k", "p"), ("k", "q"), ("q", "r")], root="k")
    return g, tree


def random_center_preserving_walk(g, tree, stretch, k, rng, steps):
    """Random edge swaps that keep ``tree`` a spanner with ``k`` as a (stretch+1)-center."""
    for _ in range(steps):
        a, b = rng.choice(sorted(tree.edges))
        side = set(distances_from(Graph(tree.edges - {(a, b)}, vertices=g.vertices), [a]))
        cross = [e for e in g.edges if (e[0] in side) != (e[1] in side) and e != (a, b)]
        if not cross:
            continue
        cand = SpanningTree.from_edges(g, (tree.edges - {(a, b)}) | {rng.choice(cross)}, root=tree.root)
        if is_tree_t_spanner(g, cand, stretch) and is_t_center(cand.graph, k, stretch + 1):
            tree = cand
            yield tree


class TestViolatingSet:
    def test_kite(self):
        g, tree = kite()
        assert violating_set(g, tree, Center.of("k")) == {"r"}

    def test_bfs_tree_is_clean(self, rng):
        for _ in range(30):
            g = random_connected_graph(rng.randint(2, 9), rng)
            k = Center.of(rng.choice(g.vertices))
            assert violating_set(g, bfs_tree_from_center(g, k), k) == frozenset()

    @pytest.mark.parametrize("t", [3, 5])
    def test_odd_counterexample_spanners_contain_violator(self, t):
        g, _, k = counterexample_odd(t)
        seen = 0
        for tree in iter_spanners(g, t):
            if is_t_center(tree.graph, k, t + 2):
                assert violator(t) in violating_set(g, tree, k)
                seen += 1
        assert seen > 0


class TestNormalize:
    def test_kite(self):
        g, tree = kite()
        out, report = normalize_shortest_paths(g, tree, 3, Center.of("k"))
        assert out.edges == {("k", "p"), ("k", "q"), ("k", "r")}
        assert report.violating == {"r"}
        assert report.swaps_performed == [(("q", "r"), ("k", "r"))]

    def test_already_normal(self, rng):
        for _ in range(20):
            g = random_connected_graph(rng.randint(2, 8), rng)
            (k, *_) = find_t_centers(g, 6) or [None]
            if k is None:
                continue
            tree = bfs_tree_from_center(g, k)
            out, report = normalize_shortest_paths(g, tree, 5, k)
            assert out == tree and report.swaps_performed == []

    def test_random_spanners(self, rng):
        done = 0
        while done < 150:
            g = random_connected_graph(rng.randint(3, 7), rng)
            t = rng.randint(2, 5)
            trees = list(itertools.islice(iter_spanners(g, t, t + 1), 30))
            if not trees:
                continue
            tree = rng.choice(trees)
            k = find_t_centers(tree.graph, t + 1)[0]
            out, report = normalize_shortest_paths(g, tree, t, k)
            assert is_tree_t_spanner(g, out, t)
            assert is_t_center(out.graph, k, t + 1)
            assert distances_from(out.graph, k.vertices) == distances_from(g, k.vertices)
            assert len(report.swaps_performed) <= len(report.violating)
            done += 1

    def test_reduction_tree(self, rng):
        from treespan import TruthAssignment, tree_from_assignment

        f = build_f(CnfInstance.from_ints([[1, 2, -3]]))
        g = f.graph
        dist = distances_from(g, f.center.vertices)
        tree = tree_from_assignment(f, TruthAssignment({"x1": False, "x2": True, "x3": True}))
        visited = set()
        for tree in random_center_preserving_walk(g, tree, 4, f.center, rng, steps=600):
            out, _ = normalize_shortest_paths(g, tree, 4, f.center)
            assert distances_from(out.graph, f.center.vertices) == dist
            assert is_tree_t_spanner(g, out, 4)
            visited.add(tree.edges)
        assert len(visited) > 20

    def test_each_swap_follows_a_shortest_path(self, rng):
        for _ in range(40):
            g = random_connected_graph(rng.randint(4, 7), rng)
            trees = list(itertools.islice(iter_spanners(g, 4, 5), 20))
            if not trees:
                continue
            tree = rng.choice(trees)
            k = find_t_centers(tree.graph, 5)[0]
            dg = distances_from(g, k.vertices)
            _, report = normalize_shortest_paths(g, tree, 4, k)
            for _, (a, b) in report.swaps_performed:
                assert abs(dg[a] - dg[b]) == 1


class TestPreconditions:
    def test_not_a_spanner(self):
        g, tree = kite()
        with pytest.raises(PreconditionError):
            normalize_shortest_paths(g, tree, 1, Center.of("k"))

    def test_wrong_center(self):
        g, tree = kite()
        with pytest.raises(PreconditionError):
            normalize_shortest_paths(g, tree, 3, Center.of("p"))

    @pytest.mark.parametrize("t", [3, 2])
    def test_counterexample_center_is_too_wide(self, t):
        g, tree, k = counterexample_odd(t) if t % 2 else counterexample_even(t)
        assert is_tree_t_spanner(g, tree, t)
        with pytest.raises(PreconditionError):
            normalize_shortest_paths(g, tree, t, k)

    def test_center_parity(self):
        g, tree = kite()
        with pytest.raises(PreconditionError):
            normalize_shortest_paths(g, tree, 3, Center.of("k", "q"))


def test_swap_report_uses_canonical_edges():
    g, tree = kite()
    _, report = normalize_shortest_paths(g, tree.rerooted("r"), 3, Center.of("k"))
    for old, new in report.swaps_performed:
        assert old == edge_key(*old) and new == edge_key(*new)
