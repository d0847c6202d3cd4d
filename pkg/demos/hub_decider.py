"""
Tree 3-spanners of diameter at most 4
=====================================

The decider looks for a hub whose far components each sit inside the
neighbourhood of one of the hub's neighbours.  We compare it with the
exhaustive search and show a witness.
"""

import random
import time

from treespan import Graph, brute_force_spanner, decide_tree3_diam4, tree_diameter

rng = random.Random(42)


def random_graph(n, p):
    names = [f"v{i}" for i in range(n)]
    while True:
        g = Graph([(a, b) for i, a in enumerate(names) for b in names[i + 1:] if rng.random() < p], vertices=names)
        if g.is_connected():
            return g


graphs = [random_graph(8, rng.uniform(0.15, 0.6)) for _ in range(500)]

start = time.perf_counter()
fast = [decide_tree3_diam4(g) for g in graphs]
t_fast = time.perf_counter() - start

start = time.perf_counter()
slow = [brute_force_spanner(g, 3, 4) for g in graphs]
t_slow = time.perf_counter() - start

agree = sum((a is None) == (b is None) for a, b in zip(fast, slow))
print(f"{agree}/{len(graphs)} agree, {sum(w is not None for w in fast)} yes")
print(f"decider {t_fast * 1e3:.1f} ms, exhaustive {t_slow * 1e3:.1f} ms")

# %%
# One witness: the hub, which neighbour covers which component, and the tree.

w = next(w for w in fast if w is not None and w.assignment)
print(w.to_json())
print("diameter", tree_diameter(w.tree), "edges", w.tree.sorted_edges())
