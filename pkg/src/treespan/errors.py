"""Exception hierarchy shared by all treespan modules."""


class GraphError(ValueError):
    """Malformed graph, tree, or vertex reference."""


class DisconnectedGraphError(GraphError):
    """Raised when an operation needs a connected graph."""


class NotASpanningTreeError(GraphError):
    """The candidate edge set is not a spanning tree of the host graph."""


class PreconditionError(ValueError):
    """The inputs violate the hypothesis an operation relies on."""


class ReductionError(ValueError):
    """Invalid input to one of the 3-SAT gadget constructions."""


class BudgetExhausted(RuntimeError):
    """An exhaustive search hit its node, tree, or time cap before finishing.

    This is never the same thing as "no solution exists".
    """

    def __init__(self, reason, nodes=0, trees=0):
        super().__init__(f"search budget exhausted: {reason}")
        self.reason = reason
        self.nodes = nodes
        self.trees = trees
