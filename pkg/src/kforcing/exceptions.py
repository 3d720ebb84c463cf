"""Exception hierarchy shared by every module."""


class KForcingError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertexError(KForcingError, ValueError):
    pass


class EmptyGraphError(KForcingError, ValueError):
    pass


class EmptySetError(KForcingError, ValueError):
    pass


class PreconditionError(KForcingError, ValueError):
    """An operation was called outside its stated hypotheses.

    ``vertex`` names the offending vertex when there is one.
    """

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class BudgetExceededError(KForcingError, RuntimeError):
    """Exact enumeration would test more candidate sets than allowed."""

    def __init__(self, message, needed=None, budget=None):
        super().__init__(message)
        self.needed = needed
        self.budget = budget


class HypothesisNotMetError(KForcingError):
    """A bound's hypothesis was checked by enumeration and does not hold."""
