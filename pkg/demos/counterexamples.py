"""
Why a tree t-spanner cannot always be made shortest-paths
=========================================================

Both families below have a tree t-spanner whose center sits one level too
wide, and no tree t-spanner of diameter t+1.  In every tree t-spanner
with that center the marked vertex is adjacent to the center in the graph
yet two steps away in the tree.
"""

from treespan import brute_force_spanner, is_t_center, is_tree_t_spanner, iter_spanners, tree_diameter, tree_distance
from treespan.gadgets import counterexample, violator
from treespan.io import to_dot

for t in (2, 3, 4, 5):
    g, tree, k = counterexample(t)
    x = violator(t)
    dists = {min(tree_distance(s, x, c) for c in k.vertices) for s in iter_spanners(g, t)
             if is_t_center(s.graph, k, t + 2)}
    print(
        f"t={t}: n={g.n} m={g.m} designated tree ok={is_tree_t_spanner(g, tree, t)} "
        f"diameter={tree_diameter(tree)} center={k.vertices} "
        f"diameter<={t + 1} possible={brute_force_spanner(g, t, t + 1) is not None} "
        f"{x} tree distance to center={sorted(dists)}"
    )

# %%
# The t=3 graph in Graphviz form; pipe it through ``dot -Tsvg`` to draw it.

g, tree, k = counterexample(3)
print(to_dot(g, tree, k))
