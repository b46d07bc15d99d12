"""Exception hierarchy shared by every module."""


class UnivoqueError(Exception):
    """Base class for all library errors."""


class Undecidable(UnivoqueError):
    """An interval comparison could not be settled at the working precision."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class PrecisionExhausted(UnivoqueError):
    """Precision escalation hit its cap without settling a comparison."""


class NotAdmissible(UnivoqueError):
    """A sequence is not the quasi-greedy expansion of 1 in any base."""


class IsolationFailed(UnivoqueError):
    """Root isolation could not certify its bracket."""


class DepthExceeded(UnivoqueError):
    """A combinatorial depth guard was violated."""


class NotIrreducible(UnivoqueError):
    """The adjacency matrix has a node that cannot reach every other node."""


class BetaTooSmall(UnivoqueError):
    """The base does not exceed the threshold the bound requires."""
