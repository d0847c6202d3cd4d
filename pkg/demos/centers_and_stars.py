"""
Centers, stars and small-diameter trees
=======================================

A graph has a spanning tree of diameter at most t exactly when it has a
t-center.  Here we look at the 8-cycle and at a few random graphs.
"""

import random

from treespan import Graph, bfs_tree_from_center, find_t_centers, is_t_star, tree_diameter
from treespan.oracle import enumerate_spanning_trees

# The 8-cycle: every spanning tree is a Hamilton path, so the best diameter is 7
c8 = Graph((f"c{i}", f"c{(i + 1) % 8}") for i in range(8))
print("best diameter:", min(tree_diameter(t) for t in enumerate_spanning_trees(c8)))
for t in range(4, 9):
    print(t, "star" if is_t_star(c8, t) else "-", [k.vertices for k in find_t_centers(c8, t)][:3])

# %%
# A BFS tree grown from a t-center has diameter <= t, which is the easy
# direction.  The other direction is checked against exhaustive enumeration.

rng = random.Random(0)
names = [f"v{i}" for i in range(7)]
for _ in range(8):
    g = Graph([(a, b) for i, a in enumerate(names) for b in names[i + 1:] if rng.random() < 0.35], vertices=names)
    if not g.is_connected():
        continue
    best = min(tree_diameter(t) for t in enumerate_spanning_trees(g))
    centers = find_t_centers(g, best)
    tree = bfs_tree_from_center(g, centers[0])
    print(f"m={g.m:2d}  best diameter {best}  center {centers[0].vertices}  bfs tree diameter {tree_diameter(tree)}")
