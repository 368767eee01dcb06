"""
Validation of graphs of bisets.
"""

from __future__ import annotations

from ..bisets import CyclicBiset, TableBiset, wreath_validate
from ..logging import logger
from ..models.reports import ValidationReport, Violation
from .model import GraphOfBisets


def _morphism_violations(gob: GraphOfBisets) -> list[Violation]:
    violations = []
    for label, morphism in (("lambda", gob.lam), ("rho", gob.rho)):
        for message in morphism.problems():
            violations.append(Violation(code="morphism", subject=label, message=message))
    return violations


def _biset_violations(gob: GraphOfBisets, key: str) -> list[Violation]:
    biset = gob.bisets.get(key)
    if biset is None:
        return [Violation(code="biset", subject=key, message="object has no biset")]
    violations = []
    left = gob.left.group(gob.lam(key))
    right = gob.right.group(gob.rho(key))
    if biset.left_group != left:
        violations.append(
            Violation(
                code="group",
                subject=key,
                message=f"left group {biset.left_group} differs from G_{gob.lam(key)} = {left}",
            )
        )
    if biset.right_group != right:
        violations.append(
            Violation(
                code="group",
                subject=key,
                message=f"right group {biset.right_group} differs from G_{gob.rho(key)} = {right}",
            )
        )
    if isinstance(biset, (CyclicBiset, TableBiset)):
        for message in biset.violations():
            violations.append(Violation(code="action", subject=key, message=message))
    if violations:
        return violations
    try:
        wreath = gob.wreath(key)
    except ValueError as exc:
        return [Violation(code="left_free", subject=key, message=str(exc))]
    for violation in wreath_validate(wreath).violations:
        violations.append(
            Violation(
                code=violation.code,
                subject=f"{key}.{violation.subject}",
                message=violation.message,
            )
        )
    return violations


def _congruence_violations(gob: GraphOfBisets, x: str) -> list[Violation]:
    if x not in gob.minus:
        return [Violation(code="congruence", subject=x, message="edge has no ()^- congruence")]
    try:
        congruence = gob.minus_congruence(x)
    except ValueError as exc:
        return [Violation(code="congruence", subject=x, message=str(exc))]
    return [
        Violation(code=f"minus_{v.code}", subject=f"{x}: {v.subject}", message=v.message)
        for v in congruence.violations()
    ]


def _reverse_violations(gob: GraphOfBisets, edge: str) -> list[Violation]:
    try:
        congruence = gob.reverse_congruence(edge)
    except ValueError as exc:
        return [Violation(code="reverse", subject=edge, message=str(exc))]
    violations = [
        Violation(code=f"reverse_{v.code}", subject=f"{edge}: {v.subject}", message=v.message)
        for v in congruence.violations()
    ]
    if not congruence.then(congruence).is_identity():
        violations.append(
            Violation(
                code="reverse",
                subject=edge,
                message=f"reversal {congruence.describe()} is not an involution",
            )
        )
    return violations


def validate_gob(gob: GraphOfBisets) -> ValidationReport:
    """Check morphisms, groups, biset actions and congruence axioms of a graph of bisets."""
    violations = _morphism_violations(gob)
    if violations:
        return ValidationReport.from_violations("gob", gob.name, violations)

    broken: set[str] = set()
    for key in gob.carrier.vertices + tuple(gob.carrier.geometric_edges()):
        found = _biset_violations(gob, key)
        if found:
            broken.add(key)
            violations.extend(found)

    for edge in gob.carrier.edges:
        if {edge.name, edge.origin, edge.terminus} & broken:
            continue
        for x in (edge.name, gob.carrier.reverse(edge.name)):
            violations.extend(_congruence_violations(gob, x))
        violations.extend(_reverse_violations(gob, edge.name))

    details = {
        "vertices": str(len(gob.carrier.vertices)),
        "edges": str(len(gob.carrier.edges)),
        "rho_simplicial": str(gob.rho.is_simplicial()).lower(),
        "lambda_simplicial": str(gob.lam.is_simplicial()).lower(),
    }
    logger.debug(f"validate_gob: {gob.name or '<unnamed>'} has {len(violations)} violation(s)")
    return ValidationReport.from_violations("gob", gob.name, violations, details)
