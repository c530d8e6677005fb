"""Exception types shared across the package."""


class GraphError(ValueError):
    """A graph violates a structural invariant or an operation's precondition."""


class GraphFormatError(GraphError):
    """An edge-list file could not be parsed.

    The offending line number (1-based) is kept in ``lineno`` when known.
    """

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class BudgetExceeded(GraphError):
    """An exact oracle was asked to solve an instance above its vertex budget."""


class EmbeddingError(GraphError):
    """A hardness embedding could not be constructed or failed verification."""
