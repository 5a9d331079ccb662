"""Exception types shared across the toolkit."""


class AlbertsonError(Exception):
    """Base class for all toolkit errors."""


class InapplicableRuleError(AlbertsonError):
    """A bound or rule was asked for outside its domain of validity.

    Callers that dispatch over several rules catch this and fall back to
    another rule; it never signals a bug.
    """


class BudgetExceededError(AlbertsonError):
    """An exact search was refused because the input exceeds the configured
    size budget.  Raised instead of silently approximating."""


class Graph6Error(AlbertsonError, ValueError):
    """Malformed graph6 input.  Carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
