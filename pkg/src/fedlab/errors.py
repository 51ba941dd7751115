"""Exception hierarchy shared by all fedlab modules."""


class FedlabError(Exception):
    """Base class for all library errors."""


class InvalidParamsError(FedlabError):
    """A graph family was requested with malformed parameters."""


class GraphFormatError(FedlabError):
    """A graph file or JSON document violates the format contract."""


class SizeLimitExceededError(FedlabError):
    """An exact search was requested beyond its vertex budget."""

    def __init__(self, message, budget):
        super().__init__(message)
        self.budget = budget


class NotATreeError(FedlabError):
    """A tree-only operation received a graph that is not a tree."""


class InvalidPartitionError(FedlabError):
    """A claimed split partition is not (clique, independent set)."""


class TotalWeightMismatchError(FedlabError):
    """Reconfiguration requires both weightings to have equal totals."""


class IllegalMoveError(FedlabError):
    """A move plan overdraws a vertex or moves outside a closed neighborhood."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class DimensionMismatchError(FedlabError):
    """A weighting does not have one entry per vertex of its graph."""


class InsufficientConnectivityError(FedlabError):
    """Fewer internally disjoint paths exist than were requested."""


class WrongShapeError(FedlabError):
    """A shape-dependent defender policy received a non-conforming state."""


class InvalidInitialError(FedlabError):
    """The initial weighting of a simulation is not fractionally dominating."""


class UnknownFixtureError(FedlabError):
    """No built-in strategy fixture with the requested name exists."""
