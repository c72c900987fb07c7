"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Two operands live on ground sets of different size."""


class UniverseTooLarge(ValueError):
    """An exhaustive computation was requested on a universe past its guard."""


class ParseError(ValueError):
    """Malformed relation or partition text."""


class PreconditionError(ValueError):
    """An argument violates a documented precondition."""
