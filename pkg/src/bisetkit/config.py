"""
Computation budgets.

Level actions grow like d**n and generator-matching searches grow like the
product of candidate counts, so every bounded computation takes a
``Budget``. Defaults can be overridden with ``BISETKIT_BUDGET``, for example
``BISETKIT_BUDGET="max_depth=10,max_points=50000"``.
"""

from __future__ import annotations

import os

from pydantic import BaseModel, ConfigDict, Field

from .errors import BudgetExceededError

BUDGET_ENV = "BISETKIT_BUDGET"


class Budget(BaseModel):
    """Size limits for level actions, searches and enumerations."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_depth: int = Field(default=12, ge=0, description="Deepest tree level computed.")
    max_points: int = Field(
        default=10**6, ge=1, description="Largest number of points at one tree level."
    )
    max_word_length: int = Field(
        default=6, ge=0, description="Largest syllable length in word enumerations."
    )
    max_matchings: int = Field(
        default=200_000,
        ge=1,
        description="Largest number of generator assignments tried by the equivalence search.",
    )
    max_order_points: int = Field(
        default=64,
        ge=1,
        description="Largest level size at which permutation-group orders are compared.",
    )
    max_elements: int = Field(
        default=100_000, ge=1, description="Largest biset ball for conjugacy classes."
    )

    @classmethod
    def from_env(cls, raw: str | None = None) -> Budget:
        """Build a budget from ``BISETKIT_BUDGET`` (or ``raw`` when given)."""
        text = os.getenv(BUDGET_ENV, "") if raw is None else raw
        return cls().with_overrides(parse_budget_pairs(text))

    def with_overrides(self, overrides: dict[str, int]) -> Budget:
        """Return a copy with some limits replaced."""
        unknown = sorted(set(overrides) - set(type(self).model_fields))
        if unknown:
            raise ValueError(f"Unknown budget key: {unknown[0]}")
        return type(self).model_validate({**self.model_dump(), **overrides})

    def check_depth(self, depth: int) -> None:
        if depth > self.max_depth:
            raise BudgetExceededError("max_depth", self.max_depth, depth)

    def check_points(self, points: int) -> None:
        if points > self.max_points:
            raise BudgetExceededError("max_points", self.max_points, points)

    def check_word_length(self, length: int) -> None:
        if length > self.max_word_length:
            raise BudgetExceededError("max_word_length", self.max_word_length, length)

    def check_matchings(self, count: int) -> None:
        if count > self.max_matchings:
            raise BudgetExceededError("max_matchings", self.max_matchings, count)

    def check_elements(self, count: int) -> None:
        if count > self.max_elements:
            raise BudgetExceededError("max_elements", self.max_elements, count)


def parse_budget_pairs(text: str) -> dict[str, int]:
    """Parse ``key=value,key=value`` into integer overrides."""
    overrides: dict[str, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        key = key.strip()
        if not sep:
            raise ValueError(f"Budget entry {key!r} must look like key=value")
        try:
            overrides[key] = int(value.strip())
        except ValueError:
            raise ValueError(f"Budget entry {key!r} has non-integer value {value.strip()!r}")
    return overrides
