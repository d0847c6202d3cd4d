import random

import pytest

from treespan import Graph

ACCEPTANCE_LINES: list[str] = []


def path_graph(n, prefix="p"):
    """Path on n vertices p0..p{n-1} (length n-1)."""
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(zip(names, names[1:]), vertices=names)


def cycle_graph(n, prefix="c"):
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph([(names[i], names[(i + 1) % n]) for i in range(n)])


def star_graph(leaves):
    return Graph((("hub", f"l{i}") for i in range(leaves)), vertices=["hub"])


def random_connected_graph(n, rng, p_low=0.15, p_high=0.9):
    names = [f"v{i}" for i in range(n)]
    while True:
        p = rng.uniform(p_low, p_high)
        edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = Graph(edges, vertices=names)
        if g.is_connected():
            return g


def random_tree_edges(n, rng):
    names = [f"v{i}" for i in range(n)]
    order = names[:]
    rng.shuffle(order)
    return [(order[i], order[rng.randrange(i)]) for i in range(1, n)], names


def atlas_graphs(max_n=7):
    """Every connected graph on 1..max_n vertices, one per isomorphism class."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(Graph(((f"v{a}", f"v{b}") for a, b in h.edges()), vertices=[f"v{a}" for a in h.nodes()]))
    return out


@pytest.fixture
def rng():
    return random.Random(20241017)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
