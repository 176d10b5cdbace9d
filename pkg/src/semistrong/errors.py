"""Exception types raised across the package."""


class GraphError(ValueError):
    """Base class for invalid graph input."""


class LoopEdge(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class UnknownEdge(GraphError, KeyError):
    pass


class UnknownVertex(GraphError, KeyError):
    pass


class SideNotEndpoint(GraphError):
    pass


class EdgeNotInGraph(GraphError):
    pass


class InvalidParameters(ValueError):
    pass


class MalformedGraph6(ValueError):
    pass


class NotATree(GraphError):
    pass


class PartialColoring(ValueError):
    """A total coloring was required but some edge is unassigned."""


class AlreadyColored(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A search ran out of its node or time budget before reaching an answer.

    This is deliberately distinct from infeasibility: the question is left
    open, not answered negatively.
    """

    def __init__(self, message: str, nodes: int = 0, seconds: float = 0.0):
        super().__init__(message)
        self.nodes = nodes
        self.seconds = seconds


class InternalInvariantViolated(AssertionError):
    pass
