"""Public pydantic models.

``models.exports`` builds on the core packages and is imported from there
directly; this package only re-exports the dependency-free report models.
"""

from .analysis import (
    Certificate,
    CertificateKind,
    ConjugacyClasses,
    EquivalenceVerdict,
    LevelSummary,
    SearchReport,
    VerdictOutcome,
)
from .reports import ValidationReport, Violation

__all__ = [
    "Certificate",
    "CertificateKind",
    "ConjugacyClasses",
    "EquivalenceVerdict",
    "LevelSummary",
    "SearchReport",
    "ValidationReport",
    "VerdictOutcome",
    "Violation",
]
