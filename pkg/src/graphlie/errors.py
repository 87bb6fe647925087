"""Exception types raised by graphlie."""

from __future__ import annotations


class GraphLieError(ValueError):
    """Base class for all library errors."""


class LoopEdge(GraphLieError):
    pass


class VertexOutOfRange(GraphLieError):
    pass


class MalformedGraph6(GraphLieError):
    pass


class MalformedEdgeList(GraphLieError):
    pass


class OutOfBounds(GraphLieError):
    """Requested enumeration exceeds the configured vertex bound."""


class AlgebraMismatch(GraphLieError):
    pass


class UnknownBasisLabel(GraphLieError):
    pass


class InvalidGraphIso(GraphLieError):
    pass
