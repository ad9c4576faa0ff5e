"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class LogicError(Exception):
    """Base class for every error raised by stablekc."""


class ParseError(LogicError):
    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"{message} at line {line}, column {column}"
        if expected:
            detail += " (expected one of: " + ", ".join(sorted(expected)) + ")"
        super().__init__(detail)


class FragmentError(LogicError):
    """Input lies outside the fragment an operation is defined for."""


class GuardExceeded(LogicError):
    """An exhaustive enumeration would exceed its resource guard.

    Pass ``force=True`` (``--force`` on the command line) to run anyway.
    """


class InvalidModelError(LogicError):
    """A Kripke model violates the partial-order or monotonicity conditions."""
