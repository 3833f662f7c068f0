class DimensionError(ValueError):
    """Weights or matrices of incompatible length."""


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


class NotACharacterError(ValueError):
    """Greedy peeling produced a negative multiplicity."""


class UncertifiedError(ValueError):
    """A character comparison or recursion left the certified region."""


class FeasibilityError(ValueError):
    """An enumeration would exceed the configured size guard."""
