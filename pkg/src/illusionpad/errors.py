"""Exception types shared across the toolkit."""


class IllusionPadError(Exception):
    """Base class for all toolkit errors."""


class DomainError(IllusionPadError, ValueError):
    """An input violates a documented precondition (bad angle, size, range)."""


class SearchError(IllusionPadError, RuntimeError):
    """A numerical search failed (bracket not found, non-monotone scan).

    Carries the evaluation trace so callers can inspect what happened.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace) if trace is not None else []
