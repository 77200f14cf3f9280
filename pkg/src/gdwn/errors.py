"""Exception types shared across the package."""


class GdwnError(Exception):
    """Base class for all package-specific errors."""


class SpecError(GdwnError, ValueError):
    """A move-pair list does not describe a valid game."""


class EmptySpec(SpecError):
    pass


class NonPositiveQ(SpecError):
    """A pair has q < 1 (or a negative entry)."""


class MultiplePair(SpecError):
    """One pair is an integer multiple of another."""

    def __init__(self, message, index, base_index, factor):
        super().__init__(message)
        self.index = index
        self.base_index = base_index
        self.factor = factor


class InvalidPair(GdwnError, ValueError):
    """A (p, q) argument violates 1 <= p < q."""


class GridTooLarge(GdwnError, ValueError):
    """Requested outcome grid exceeds the memory guard."""


class BudgetExceeded(GdwnError, RuntimeError):
    """The mex scan passed the configured value cap."""

    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column


class InsufficientData(GdwnError, ValueError):
    """A series is too short for the requested analysis."""


class WrongSpec(GdwnError, ValueError):
    """An analysis was applied to a table for the wrong game."""
