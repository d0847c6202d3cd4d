"""Tree t-spanners of diameter at most t+1.

Decision for stretch up to 3, gadget constructions for the NP-hard cases,
and brute-force oracles to check them against.
"""

from .diam4 import Diam4Witness, decide_small_t, decide_tree3_diam4
from .errors import (
    BudgetExhausted,
    DisconnectedGraphError,
    GraphError,
    NotASpanningTreeError,
    PreconditionError,
    ReductionError,
)
from .gadgets import (
    CnfInstance,
    ReductionGraph,
    TailGadget,
    TruthAssignment,
    assignment_from_tree,
    build_f,
    build_h,
    counterexample_even,
    counterexample_odd,
    lift_tree,
    matrix_m,
    project_tree,
    tree_from_assignment,
)
from .graph import (
    Center,
    Graph,
    SpanningTree,
    components_without,
    distances_from,
    tree_diameter,
    tree_distance,
)
from .normalize import ViolationReport, normalize_shortest_paths, violating_set
from .oracle import (
    SearchBudget,
    brute_force_sat,
    brute_force_spanner,
    enumerate_spanning_trees,
    iter_spanners,
    sps_tree_search,
)
from .spanner import (
    Midst,
    bfs_tree_from_center,
    check_certificate,
    check_midst_separation,
    find_t_centers,
    is_t_center,
    is_t_star,
    is_tree_t_spanner,
    t_midsts,
)

__version__ = "0.1.0"

__all__ = [
    "assignment_from_tree",
    "bfs_tree_from_center",
    "brute_force_sat",
    "brute_force_spanner",
    "BudgetExhausted",
    "build_f",
    "build_h",
    "Center",
    "check_certificate",
    "check_midst_separation",
    "CnfInstance",
    "components_without",
    "counterexample_even",
    "counterexample_odd",
    "decide_small_t",
    "decide_tree3_diam4",
    "Diam4Witness",
    "DisconnectedGraphError",
    "distances_from",
    "enumerate_spanning_trees",
    "find_t_centers",
    "Graph",
    "GraphError",
    "is_t_center",
    "is_t_star",
    "is_tree_t_spanner",
    "iter_spanners",
    "lift_tree",
    "matrix_m",
    "Midst",
    "normalize_shortest_paths",
    "NotASpanningTreeError",
    "PreconditionError",
    "project_tree",
    "ReductionError",
    "ReductionGraph",
    "SearchBudget",
    "SpanningTree",
    "sps_tree_search",
    "t_midsts",
    "TailGadget",
    "tree_diameter",
    "tree_distance",
    "tree_from_assignment",
    "TruthAssignment",
    "violating_set",
    "ViolationReport",
]
