"""Exception hierarchy shared by every module."""


class PosknotsError(Exception):
    """Base class for all package errors."""


class BraidParseError(PosknotsError, ValueError):
    """Raised when a braid word string cannot be parsed or validated."""


class NotAKnotError(PosknotsError, ValueError):
    """Raised when a closure is required to be a knot (or non-split) but is not."""

    def __init__(self, message: str, components: int):
        super().__init__(message)
        self.components = components


class ContractError(PosknotsError):
    """A documented precondition of an operation was violated by the caller."""


class InvariantError(PosknotsError):
    """An internal consistency check failed; always indicates a bug."""


class InexactDivisionError(InvariantError):
    """Polynomial division that must be exact left a remainder."""


class TemplateError(PosknotsError, ValueError):
    """Raised for malformed or invalid template descriptions."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
