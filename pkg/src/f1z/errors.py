"""Exception hierarchy shared by every f1z module."""

from __future__ import annotations


class F1zError(Exception):
    """Base class for all library errors."""


class LooseGraphError(F1zError, ValueError):
    """Invalid loose-graph data or source text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(F1zError, ValueError):
    """An operation was called outside its domain (wrong graph shape, unknown vertex...)."""


class BudgetExceeded(F1zError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what}: requires {required} > budget {budget}")


class ConsistencyError(F1zError):
    """Two computation routes disagree, or counts are not an integer polynomial."""
