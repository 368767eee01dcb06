"""
Exception hierarchy for bisetkit.

Validation operations return reports and never raise for invalid data.
Exceptions are reserved for inputs that cannot be processed at all:
unreadable text, structures that violate a precondition of the requested
construction, and computations that would exceed a configured budget.
"""

from __future__ import annotations


class BisetkitError(Exception):
    """Root of all bisetkit errors."""


class ParseError(BisetkitError, ValueError):
    """Text input could not be parsed.

    Attributes:
        source: File name or ``<string>``.
        line: 1-based line number of the offending token.
        column: 1-based column number of the offending token.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<string>"):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source}:{line}:{column}: {message}")


class StructureError(BisetkitError, ValueError):
    """A structure violates a precondition of the requested operation."""


class BudgetExceededError(BisetkitError):
    """A computation would exceed a configured budget.

    Attributes:
        budget: Name of the budget field (for example ``max_points``).
        limit: Configured limit.
        requested: Size the computation asked for.
    """

    def __init__(self, budget: str, limit: int, requested: int):
        self.budget = budget
        self.limit = limit
        self.requested = requested
        super().__init__(f"budget {budget} exceeded: requested {requested}, limit {limit}")
