"""Shared exception types."""

from __future__ import annotations


class WqolabError(Exception):
    """Base class for all library errors."""


class DomainError(WqolabError, ValueError):
    """An argument lies outside an operation's declared domain."""


class ParseError(WqolabError, ValueError):
    """Malformed input text; carries a line/column position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class BudgetExceeded(WqolabError, RuntimeError):
    """A computed value would exceed the caller's bit or iteration budget."""


class SearchExhausted(WqolabError, RuntimeError):
    """A bounded search ran out of input without finding a witness."""
