"""
Normalising a tree spanner around its center
============================================

A tree t-spanner whose diameter is at most t+1 can be edge-swapped, one
vertex at a time, into one where every vertex reaches the center along a
shortest graph path.  The swaps never break the spanner property.
"""

import random

from treespan import (
    Center,
    Graph,
    SpanningTree,
    find_t_centers,
    iter_spanners,
    normalize_shortest_paths,
    violating_set,
)

# The smallest interesting case: r is adjacent to k but hangs below q
g = Graph([("k", "p"), ("k", "q"), ("k", "r"), ("q", "r")])
tree = SpanningTree.from_edges(g, [("k", "p"), ("k", "q"), ("q", "r")], root="k")
out, report = normalize_shortest_paths(g, tree, 3, Center.of("k"))
print("violating:", sorted(report.violating), "swaps:", report.swaps_performed, "result:", out.sorted_edges())

# %%
# Random graphs: pick a spanner of diameter t+1 and count the swaps.

rng = random.Random(1)
names = [f"v{i}" for i in range(8)]
shown = 0
while shown < 8:
    g = Graph([(a, b) for i, a in enumerate(names) for b in names[i + 1:] if rng.random() < 0.4], vertices=names)
    if not g.is_connected():
        continue
    t = rng.choice([3, 4, 5])
    trees = [tr for _, tr in zip(range(100), iter_spanners(g, t, t + 1))]
    if not trees:
        continue
    tree = rng.choice(trees)
    k = find_t_centers(tree.graph, t + 1)[0]
    before = violating_set(g, tree, k)
    out, report = normalize_shortest_paths(g, tree, t, k)
    print(f"t={t} center={k.vertices} violating={sorted(before)} swaps={len(report.swaps_performed)}")
    shown += 1
