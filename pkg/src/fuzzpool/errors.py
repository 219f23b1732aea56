"""Exception types shared across the package.

Graph errors derive from :class:`FuzzyGraphError`, network errors from
:class:`NetworkError`, so callers can catch a whole family or a single
condition.
"""


class FuzzyGraphError(Exception):
    """Base class for fuzzy-graph construction and query errors."""


class DuplicateVertex(FuzzyGraphError):
    pass


class UnknownVertex(FuzzyGraphError):
    pass


class UnknownEdge(FuzzyGraphError):
    pass


class SelfLoop(FuzzyGraphError):
    pass


class MembershipOutOfRange(FuzzyGraphError):
    pass


class FuzzyInequalityViolated(FuzzyGraphError):
    """An edge membership exceeds the minimum of its endpoint memberships."""


class InvalidPath(FuzzyGraphError):
    pass


class InvalidVertexId(FuzzyGraphError):
    pass


class ParseError(FuzzyGraphError):
    """Malformed graph file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IdenticalVertices(FuzzyGraphError):
    pass


class InvalidPlan(FuzzyGraphError):
    pass


class NotACycle(FuzzyGraphError):
    pass


class NotABlock(FuzzyGraphError):
    pass


class NotCompleteFuzzy(FuzzyGraphError):
    pass


class TooLarge(FuzzyGraphError):
    """Graph exceeds the bound for exhaustive isomorphism search."""


class NetworkError(Exception):
    """Base class for dense-network errors."""


class BadArchitecture(NetworkError):
    pass


class ShapeMismatch(NetworkError):
    pass


class EmptyDataset(NetworkError):
    pass


class LengthMismatch(NetworkError):
    pass


class IndexOutOfRange(NetworkError):
    pass


class NotHiddenLayer(NetworkError):
    pass
