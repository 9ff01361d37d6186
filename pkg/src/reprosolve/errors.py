"""Exception hierarchy shared by every module of the package."""


class ReprosolveError(Exception):
    """Base class for all package errors."""


class FieldMismatch(ReprosolveError):
    pass


class DivisionByZero(ReprosolveError, ZeroDivisionError):
    pass


class NotEnumerable(ReprosolveError):
    """Raised when an exhaustive listing is requested over the rationals."""


class CapExceeded(ReprosolveError):
    pass


class DimensionMismatch(ReprosolveError, ValueError):
    pass


class ShapeMismatch(DimensionMismatch):
    pass


class NotSquare(DimensionMismatch):
    pass


class NotComposable(ShapeMismatch):
    """The generator's output shape differs from its parameter shape."""


class IndexTooSmall(ReprosolveError):
    """A power is below the index of its base matrix."""


class InvalidOneInverse(ReprosolveError):
    pass


class Inconsistent(ReprosolveError):
    """A closed-form solution was requested for an inconsistent problem."""


class NotASolution(ReprosolveError):
    pass


class X1Unverified(ReprosolveError):
    """The canonical common solution failed verification on a consistent system."""


class ParseError(ReprosolveError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(ReprosolveError):
    pass
