"""Exception hierarchy shared across the package."""


class SpexError(Exception):
    """Base class for all spexkit errors."""


class DomainError(SpexError, ValueError):
    """An argument violates an operation's precondition."""


class CapacityError(SpexError, ValueError):
    """A request exceeds a hard size cap (vertex count, search scale)."""


class NumericalError(SpexError, RuntimeError):
    """An iterative numerical routine failed to converge.

    Carries the last residual/interval width seen, when available.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class Graph6Error(SpexError, ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset
