"""Exception hierarchy shared by the graph, walk and experiment layers."""


class QWalkError(Exception):
    """Base class for every error raised by `qwalk`."""


class ConfigurationError(QWalkError, ValueError):
    """Raised when a walk, builder or kernel call is wired inconsistently."""


class GraphLookupError(QWalkError, KeyError):
    """Raised when a vertex id is not part of the graph."""

    def __str__(self) -> str:
        """Render the message without KeyError's repr quoting.

        Returns:
            The resulting value.
        """
        return str(self.args[0]) if self.args else ""


class GraphStateError(QWalkError, RuntimeError):
    """Raised when a frozen graph is mutated."""


class GraphParseError(QWalkError, ValueError):
    """Raised when a graph file cannot be parsed."""


class AmbiguityError(QWalkError):
    """Raised when a quantum branch label has more than one target."""


class BoundaryError(QWalkError):
    """Raised when a branch with the `forbid` policy hits a missing edge."""


class WalkError(QWalkError):
    """Raised when a classical walker has nowhere to go."""


class IntegrityError(QWalkError):
    """Raised when norm, unitarity or recovery checks fail."""


class CapabilityError(QWalkError):
    """Raised when a computation exceeds a configured size guard."""


class GoldenTableError(QWalkError, ValueError):
    """Raised when a golden table file is malformed."""
