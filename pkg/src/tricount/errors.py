"""Exception types shared across the package."""


class TricountError(Exception):
    """Base class for all tricount-specific errors."""


class MalformedInputError(TricountError):
    """A graph or matrix violates a structural precondition."""


class ParseError(TricountError):
    """An edge-list file failed to parse.  Carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class ConsistencyError(TricountError):
    """An internal cross-check failed (divisibility, trial agreement, or
    oracle verification)."""


class SizeCapError(TricountError):
    """A generator would exceed its configured size cap."""
