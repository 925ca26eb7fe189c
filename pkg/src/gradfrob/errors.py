"""Exception types shared across the package."""


class GradfrobError(Exception):
    """Base class for all package errors."""


class ElementOutOfModel(GradfrobError, ValueError):
    def __init__(self, model, value):
        super().__init__(f"{value!r} is not an element of {model}")
        self.model = model
        self.value = value


class GroupTableError(GradfrobError, ValueError):
    """A Cayley table failed the group axioms; ``witness`` names the offending elements."""

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class NotSquare(GradfrobError, ValueError):
    pass


class VariableMismatch(GradfrobError, ValueError):
    pass


class DimensionMismatch(GradfrobError, ValueError):
    pass


class CocycleViolation(GradfrobError, ValueError):
    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class ValidationError(GradfrobError, ValueError):
    """Raised when an algebra fails validation; carries the full report."""

    def __init__(self, report):
        first = report.violations[0] if report.violations else None
        super().__init__(f"algebra failed validation ({len(report.violations)} findings); first: {first}")
        self.report = report


class ParseError(GradfrobError, ValueError):
    def __init__(self, message, location=None):
        text = f"{location}: {message}" if location else message
        super().__init__(text)
        self.location = location
