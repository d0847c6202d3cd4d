"""
From 3-SAT to tree spanners
===========================

A 3-SAT instance becomes a graph that has a tree 4-spanner of diameter at
most 5 exactly when the instance is satisfiable.  Attaching a tail gadget
moves the same statement to any stretch t >= 5.
"""

import itertools

from treespan import (
    CnfInstance,
    TruthAssignment,
    assignment_from_tree,
    brute_force_sat,
    build_f,
    build_h,
    is_tree_t_spanner,
    lift_tree,
    matrix_m,
    project_tree,
    sps_tree_search,
    tree_diameter,
    tree_from_assignment,
)

# The clause/cover matrix: rows come in complementary pairs, one pair per literal slot
print(matrix_m())

# %%
# One clause, (x1 or x2 or not x3)

inst = CnfInstance.from_ints([[1, 2, -3]])
f = build_f(inst)
print("f has", f.graph.n, "vertices and", f.graph.m, "edges")

tree = tree_from_assignment(f, TruthAssignment({"x1": False, "x2": True, "x3": True}))
print("4-spanner:", is_tree_t_spanner(f.graph, tree, 4), "diameter:", tree_diameter(tree))
print("read back:", dict(assignment_from_tree(f, tree).values))

# %%
# The sign cube over three variables is unsatisfiable, and so the search
# over shortest-paths trees comes back empty.

cube = CnfInstance.from_ints([[a, 2 * b, 3 * c] for a, b, c in itertools.product((1, -1), repeat=3)])
print("cube satisfiable:", brute_force_sat(cube) is not None)
fc = build_f(cube)
print("cube spanner:", sps_tree_search(fc.graph, fc.center, 4) is not None, f"({fc.graph.n} vertices)")

# %%
# Lifting to larger stretch and back

for t in (5, 6, 7):
    h, tail = build_h(f, t)
    big = lift_tree(f, tree, t)
    print(
        f"t={t}: h has {h.n} vertices, lifted tree {t}-spanner={is_tree_t_spanner(h, big, t)} "
        f"diameter={tree_diameter(big)} round trip={project_tree(f, big, t) == tree}"
    )
