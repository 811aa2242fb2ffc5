"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for every error this package raises on purpose."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class VertexRangeError(GraphError):
    """A vertex index falls outside 0..n-1, or the vertex count is invalid."""


class NotConnectedError(GraphError):
    """A metric operation was asked for on a disconnected graph."""


class TrivialGraphError(GraphError):
    """Index operations reject the one-vertex graph."""


class EmptyVertexSetError(GraphError):
    """An induced subgraph needs at least one vertex."""


class NotATreeError(GraphError):
    """Tree-only machinery received a graph with a cycle."""


class InvalidParameterError(GraphError):
    """A generator or closed form got parameters outside its domain."""


class InvalidCodeError(GraphError):
    """A caterpillar/lobster code violates its structural constraints."""


class EdgeListSyntaxError(GraphError):
    """Bad edge-list text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedGraph6Error(GraphError):
    """The byte sequence is not a valid graph6 record."""


class TooLargeError(GraphError):
    """The requested object exceeds a documented size ceiling."""
