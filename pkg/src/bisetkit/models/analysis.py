"""
Public models for level actions, equivalence verdicts and conjugacy classes.
"""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field


class LevelSummary(BaseModel):
    """Cycle structure of a self-biset's action on one level of its tree."""

    biset: str = Field(description="Name of the biset.")
    degree: int = Field(description="Degree of the biset.")
    level: int = Field(description="Tree level; it has degree**level points.")
    points: int = Field(description="Number of points at this level.")
    cycle_types: dict[str, list[int]] = Field(
        description="Cycle lengths of every generator, fixed points included, decreasing."
    )
    orbit_sizes: list[int] = Field(description="Orbit sizes of the whole group, decreasing.")


class CertificateKind(str, Enum):
    """Invariant on which two bisets were found to differ."""

    DEGREE = "degree"
    ORBIT_SIZES = "orbit_sizes"
    QUOTIENT_ORDER = "quotient_order"


class Certificate(BaseModel):
    """Re-checkable evidence that two bisets are not combinatorially equivalent."""

    kind: CertificateKind = Field(description="Invariant that differs.")
    level: int = Field(description="Tree level at which the invariant was compared.")
    left: str = Field(description="Value of the invariant for the first biset.")
    right: str = Field(description="Value of the invariant for the second biset.")


class SearchReport(BaseModel):
    """Generator-matching search that found no images within the word length.

    A failed search is not evidence of inequivalence: the conjugating
    isomorphism may need longer images.
    """

    word_length: int = Field(description="Largest syllable length of candidate images.")
    forward_found: bool = Field(description="Whether images from the first group matched.")
    backward_found: bool = Field(description="Whether images from the second group matched.")
    candidates: dict[str, int] = Field(
        default_factory=dict,
        description="Candidate images left per generator after pruning, keyed by direction.",
    )
    matchings_tried: int = Field(description="Generator assignments examined.")


class VerdictOutcome(str, Enum):
    DISTINGUISHED = "distinguished"
    CONSISTENT = "consistent"
    INCONCLUSIVE = "inconclusive"


class EquivalenceVerdict(BaseModel):
    """Outcome of a bounded combinatorial-equivalence test.

    ``distinguished`` is sound and carries a certificate. ``consistent`` only
    means no difference was found up to ``depth`` and ``word_length``.
    ``inconclusive`` means the invariants agree but no generator images
    within ``word_length`` matched; ``search`` records what was tried.
    """

    outcome: VerdictOutcome = Field(
        description="Distinguished, consistent up to the bounds, or inconclusive."
    )
    depth: int = Field(description="Deepest tree level compared.")
    word_length: int = Field(description="Largest syllable length of candidate images.")
    certificate: Certificate | None = Field(
        default=None, description="Evidence of the difference when distinguished."
    )
    search: SearchReport | None = Field(
        default=None, description="The failed matching search when inconclusive."
    )
    forward: dict[str, str] = Field(
        default_factory=dict,
        description="Generator images from the first group into the second that matched.",
    )
    backward: dict[str, str] = Field(
        default_factory=dict,
        description="Generator images from the second group into the first that matched.",
    )

    @property
    def distinguished(self) -> bool:
        return self.outcome is VerdictOutcome.DISTINGUISHED

    def summary(self) -> str:
        if self.certificate is not None:
            c = self.certificate
            return (
                f"Distinguished: {c.kind.value} at level {c.level} "
                f"({c.left} vs {c.right})"
            )
        if self.search is not None:
            missing = [
                direction
                for direction, found in (
                    ("forward", self.search.forward_found),
                    ("backward", self.search.backward_found),
                )
                if not found
            ]
            return (
                f"InconclusiveUpTo({self.depth}, {self.word_length}): "
                f"no {' and '.join(missing)} generator match"
            )
        return f"ConsistentUpTo({self.depth}, {self.word_length})"


class ConjugacyClasses(BaseModel):
    """Classes of a ball of biset elements under bounded conjugation."""

    biset: str = Field(description="Name of the biset.")
    radius: int = Field(description="Largest syllable length of decorations and conjugators.")
    elements: int = Field(description="Number of elements h*s in the ball.")
    representatives: list[str] = Field(description="Shortlex-least element of every class.")
    sizes: list[int] = Field(description="Class sizes, aligned with representatives.")
    disclaimer: str = Field(
        default="classes found within the ball may merge at a larger radius",
        description="Classes are only a lower bound on merging.",
    )
