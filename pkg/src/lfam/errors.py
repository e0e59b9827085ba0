"""Exception types shared across the toolkit."""


class LfamError(Exception):
    """Base class for toolkit errors."""


class GraphSizeError(LfamError, ValueError):
    """A graph exceeds the supported vertex cap."""


class BudgetExceededError(LfamError, RuntimeError):
    """A search or enumeration ran past its configured budget.

    ``partial`` carries best-so-far information when the caller can use a
    lower bound (value, witness, undecided range).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class FormatError(LfamError, ValueError):
    """Malformed textual input (graph6, edge list, family file, ...)."""
