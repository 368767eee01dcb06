"""
Public validation report models.

Every ``*_validate`` / ``validate_*`` operation returns a ``ValidationReport``
instead of raising, so the CLI and library callers can list all problems of
a structure at once.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class Violation(BaseModel):
    """A single broken invariant."""

    code: str = Field(description="Machine-readable violation kind (for example relation).")
    subject: str = Field(description="Object, generator or vertex the violation is about.")
    message: str = Field(description="Human-readable description of the violation.")


class ValidationReport(BaseModel):
    """Outcome of validating one structure."""

    kind: str = Field(description="Structure kind: wreath, congruence, gob, bundle or gog.")
    name: str = Field(default="", description="Workspace name of the validated structure.")
    valid: bool = Field(description="True when no violation was found.")
    violations: list[Violation] = Field(
        default_factory=list, description="All violations found, in discovery order."
    )
    details: dict[str, str] = Field(
        default_factory=dict,
        description="Derived data worth reporting (for example boundary offsets).",
    )

    @classmethod
    def from_violations(
        cls,
        kind: str,
        name: str,
        violations: list[Violation],
        details: dict[str, str] | None = None,
    ) -> ValidationReport:
        return cls(
            kind=kind,
            name=name,
            valid=not violations,
            violations=violations,
            details=details or {},
        )

    def summary(self) -> str:
        if self.valid:
            return f"{self.kind} {self.name}: valid"
        lines = [f"{self.kind} {self.name}: {len(self.violations)} violation(s)"]
        lines.extend(f"  [{v.code}] {v.subject}: {v.message}" for v in self.violations)
        return "\n".join(lines)
