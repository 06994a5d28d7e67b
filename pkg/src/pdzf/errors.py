"""Exception types shared across the package."""

from __future__ import annotations


class PdzfError(Exception):
    """Base class for every error this package raises on purpose."""


class GraphError(PdzfError, ValueError):
    """Invalid graph construction or vertex argument."""


class EdgeListError(PdzfError, ValueError):
    """Malformed edge-list input; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedHeaderError(EdgeListError):
    """The 'n m' header line is missing or unreadable."""


class MalformedEdgeError(EdgeListError):
    """An edge line is not two integers."""


class VertexOutOfRangeError(EdgeListError):
    """An edge endpoint is outside [0, n)."""


class SelfLoopError(EdgeListError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(EdgeListError):
    """An edge appears twice (in either orientation)."""


class EdgeCountMismatchError(EdgeListError):
    """The body does not contain exactly the declared number of edges."""


class GuardExceededError(PdzfError):
    """An instance is larger than the configured enumeration guard."""


class InfeasibleError(PdzfError):
    """The requested certificate does not exist."""


class InconsistentTraceError(PdzfError):
    """A propagation trace violates the color change rule."""


class NotATreeError(PdzfError, ValueError):
    """A tree-only operation was given a graph that is not a tree."""


class BoundHypothesisError(PdzfError, ValueError):
    """The hypotheses of a bound are not satisfied by the given objects."""
