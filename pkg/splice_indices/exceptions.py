"""Exceptions module."""


class SpliceIndicesException(Exception):
    """SpliceIndices exception."""


class GraphValidationError(SpliceIndicesException):
    """The input does not describe a simple connected graph."""


class EmptyGraphError(GraphValidationError):
    """A graph needs at least one vertex."""


class SelfLoopError(GraphValidationError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphValidationError):
    """The same unordered pair appears twice in the edge sequence."""


class DisconnectedGraphError(GraphValidationError):
    """Some vertex cannot be reached from vertex 0."""


class VertexOutOfRangeError(GraphValidationError):
    """A vertex id does not belong to 0..n-1."""


class NotAnEdgeError(SpliceIndicesException):
    """The pair of vertices is not an edge of the graph."""


class IndexOverflowError(SpliceIndicesException, OverflowError):
    """An index value does not fit in an unsigned 64-bit integer."""


class EdgeListParseError(SpliceIndicesException):
    """The graph file is malformed."""


class EnumerationLimitError(SpliceIndicesException):
    """Exhaustive enumeration was requested beyond the supported size."""


class CampaignConfigError(SpliceIndicesException):
    """The campaign configuration is inconsistent."""
