"""
Angled Hubbard trees and their one-step preimages.

A ``HubbardTree`` is a tree with an order at every vertex and an angle
``D_x`` in ``Q/Z`` at the origin of every oriented edge ``x``; the angle
between two edges at a vertex is ``D_x - D_y``. A ``HubbardBundle`` couples
the tree ``HT`` with its preimage ``HT1`` and the maps

    p:     HT1 -> HT   the dynamics (simplicial),
    lam:   HT1 -> HT   the retraction (vertices may go to edges),
    deg:   local degree of p at every vertex of HT1,
    embed: HT -> HT1   the inclusion, whose image is the essential vertices.

Angles are exact ``Fraction`` values normalized into ``[0, 1)``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm

from ..algebra import INFINITE
from ..graphs import Graph, GraphMorphism, geometric_name, reverse_name
from ..logging import logger
from ..models.reports import ValidationReport, Violation


def normalize_angle(value: Fraction | int | str) -> Fraction:
    """Canonical representative of an angle in ``[0, 1)``."""
    return Fraction(value) % 1


@dataclass(frozen=True)
class HubbardTree:
    """An angled tree; ``angles`` is keyed by oriented edge, ``ord`` by vertex (0 = infinite)."""

    tree: Graph
    angles: Mapping[str, Fraction] = field(default_factory=dict)
    ord: Mapping[str, int] = field(default_factory=dict)
    name: str = field(default="", compare=False)

    def order(self, vertex: str) -> int:
        return self.ord.get(vertex, 1)

    def angle(self, x: str) -> Fraction:
        return normalize_angle(self.angles[x])

    def corner(self, first: str, second: str) -> Fraction:
        """The angle from ``second`` to ``first`` at their common origin."""
        return (self.angle(first) - self.angle(second)) % 1

    def violations(self, label: str) -> list[Violation]:
        violations = []
        if not self.tree.is_tree():
            violations.append(Violation(code="tree", subject=label, message="graph is not a tree"))
        for vertex in self.tree.vertices:
            seen: dict[Fraction, str] = {}
            for x in self.tree.outgoing(vertex):
                if x not in self.angles:
                    violations.append(
                        Violation(code="angle", subject=x, message=f"no angle at {vertex}")
                    )
                    continue
                angle = self.angle(x)
                if angle in seen:
                    violations.append(
                        Violation(
                            code="angle",
                            subject=x,
                            message=f"angle {angle} at {vertex} repeats {seen[angle]}",
                        )
                    )
                seen[angle] = x
            order = self.order(vertex)
            if order < 0:
                violations.append(
                    Violation(code="ord", subject=vertex, message=f"negative order {order}")
                )
        return violations


@dataclass(frozen=True)
class HubbardBundle:
    base: HubbardTree
    cover: HubbardTree
    p: Mapping[str, str]
    lam: Mapping[str, str]
    deg: Mapping[str, int] = field(default_factory=dict)
    embed: Mapping[str, str] = field(default_factory=dict)
    name: str = field(default="", compare=False)

    def dynamics(self) -> GraphMorphism:
        return GraphMorphism(self.cover.tree, self.base.tree, dict(self.p), "p")

    def degree_at(self, z: str) -> int:
        return self.deg.get(z, 1)

    def total_degree(self) -> int:
        return 1 + sum(self.degree_at(z) - 1 for z in self.cover.tree.vertices)

    def retract(self, x: str) -> str:
        """``lam`` on any object of ``HT1``; a reversed edge goes to the reversed image."""
        if self.cover.tree.is_vertex(x):
            return self.lam[x]
        image = self.lam[geometric_name(x)]
        if x == geometric_name(x) or self.base.tree.is_vertex(image):
            return image
        return reverse_name(image)

    def essential(self) -> frozenset[str]:
        return frozenset(self.embed.values())

    def critical(self) -> frozenset[str]:
        return frozenset(z for z in self.cover.tree.vertices if self.degree_at(z) >= 2)

    def is_active(self, z: str) -> bool:
        """Essential and critical vertices carry a right-active biset."""
        return z in self.essential() or z in self.critical()

    def vertex_dynamics(self) -> dict[str, str]:
        """The induced self-map ``v -> p(embed(v))`` of the vertices of ``HT``."""
        return {v: self.p[self.embed[v]] for v in self.base.tree.vertices if v in self.embed}


def boundary_offsets(bundle: HubbardBundle) -> dict[str, Fraction | None]:
    """``a_z`` with ``D_p(x) = deg_z * D_x + a_z`` at every edge of ``z``, or ``None``."""
    cover = bundle.cover
    dynamics = bundle.dynamics()
    offsets: dict[str, Fraction | None] = {}
    for z in cover.tree.vertices:
        degree = bundle.degree_at(z)
        found: Fraction | None = None
        consistent = True
        for x in cover.tree.outgoing(z):
            try:
                offset = (bundle.base.angle(dynamics(x)) - degree * cover.angle(x)) % 1
            except (KeyError, ValueError):
                consistent = False
                break
            if found is None:
                found = offset
            elif offset != found:
                consistent = False
                break
        offsets[z] = (found if found is not None else Fraction(0)) if consistent else None
    return offsets


def derive_ord(bundle: HubbardBundle) -> dict[str, int]:
    """Orbifold orders of the vertices of ``HT`` (``INFINITE`` is 0).

    ``ord(v)`` is the lcm of the local degrees of ``p^n`` over backward
    orbits of ``v``. Only critical points contribute, so the forward orbit of
    every critical value is walked until it cycles; a cycle through a
    critical vertex of ``HT`` makes its vertices infinite.
    """
    step = bundle.vertex_dynamics()
    orders = {v: 1 for v in bundle.base.tree.vertices}
    infinite: set[str] = set()
    for z in sorted(bundle.critical()):
        vertex = bundle.p[z]
        multiplier = bundle.degree_at(z)
        visited: list[str] = []
        while vertex not in visited:
            visited.append(vertex)
            orders[vertex] = lcm(orders[vertex], multiplier)
            if vertex not in step:
                break
            multiplier *= bundle.degree_at(bundle.embed[vertex])
            vertex = step[vertex]
        else:
            cycle = visited[visited.index(vertex) :]
            if any(bundle.degree_at(bundle.embed[v]) >= 2 for v in cycle):
                infinite.update(cycle)
    for vertex in infinite:
        orders[vertex] = INFINITE
    logger.debug(f"derive_ord: {len(infinite)} infinite, orders {orders}")
    return orders


def _sd_image(bundle: HubbardBundle, image: str) -> str:
    return image if bundle.base.tree.is_vertex(image) else f"[{geometric_name(image)}]"


def _lam_violations(bundle: HubbardBundle) -> list[Violation]:
    base, cover = bundle.base.tree, bundle.cover.tree
    violations = []
    for x in cover.vertices + tuple(cover.geometric_edges()):
        image = bundle.lam.get(x)
        if image is None:
            violations.append(Violation(code="lambda", subject=x, message="lam is not defined"))
        elif not base.has_object(image):
            violations.append(
                Violation(code="lambda", subject=x, message=f"lam image {image!r} is not in HT")
            )
    if violations:
        return violations
    # Adjacent objects go to adjacent or equal objects of the subdivided base.
    for edge in cover.edges:
        middle = _sd_image(bundle, bundle.retract(edge.name))
        for end in (edge.origin, edge.terminus):
            image = _sd_image(bundle, bundle.retract(end))
            if image == middle:
                continue
            if not _adjacent_in_subdivision(base, image, middle):
                violations.append(
                    Violation(
                        code="lambda",
                        subject=edge.name,
                        message=f"lam({end}) = {bundle.retract(end)} is not adjacent to "
                        f"lam({edge.name}) = {bundle.retract(edge.name)}",
                    )
                )
    return violations


def _adjacent_in_subdivision(base: Graph, a: str, b: str) -> bool:
    """Whether ``a`` and ``b`` span a half-edge in the barycentric subdivision of ``base``."""
    for vertex, middle in ((a, b), (b, a)):
        if base.is_vertex(vertex) and middle.startswith("[") and middle.endswith("]"):
            edge = base.edge(middle[1:-1])
            if vertex in (edge.origin, edge.terminus):
                return True
    return False


def validate_bundle(bundle: HubbardBundle) -> ValidationReport:
    """Check the tree, angle, degree, retraction and order invariants of a bundle.

    ``details`` reports the total degree, the boundary offsets ``a_z``, the
    essential and critical vertices and the derived orders.
    """
    base, cover = bundle.base, bundle.cover
    violations = base.violations("HT") + cover.violations("HT1")
    dynamics = bundle.dynamics()
    problems = dynamics.problems()
    for message in problems:
        violations.append(Violation(code="dynamics", subject="p", message=message))
    if not problems and not dynamics.is_simplicial():
        violations.append(
            Violation(code="dynamics", subject="p", message="p maps an edge to a vertex")
        )

    degree = bundle.total_degree()
    for z in cover.tree.vertices:
        if bundle.degree_at(z) < 1:
            violations.append(
                Violation(code="degree", subject=z, message=f"local degree {bundle.degree_at(z)}")
            )
    if not problems:
        for v in base.tree.vertices:
            total = sum(bundle.degree_at(z) for z in dynamics.preimage(v))
            if total != degree:
                violations.append(
                    Violation(
                        code="degree",
                        subject=v,
                        message=f"preimages have total local degree {total}, expected {degree}",
                    )
                )
        for f in base.tree.geometric_edges():
            lifts = [e for e in cover.tree.geometric_edges() if geometric_name(dynamics(e)) == f]
            count = len(lifts)
            if count != degree:
                violations.append(
                    Violation(
                        code="degree",
                        subject=f,
                        message=f"edge has {count} preimages, expected {degree}",
                    )
                )
        for z in cover.tree.vertices:
            star = len(cover.tree.outgoing(z))
            expected = bundle.degree_at(z) * len(base.tree.outgoing(dynamics(z)))
            if star != expected:
                violations.append(
                    Violation(
                        code="star",
                        subject=z,
                        message=f"{star} edges at {z}, expected {expected}",
                    )
                )

    offsets: dict[str, Fraction | None] = {}
    if not violations:
        offsets = boundary_offsets(bundle)
        for z, offset in offsets.items():
            if offset is None:
                violations.append(
                    Violation(
                        code="functoriality",
                        subject=z,
                        message=f"angles at {z} are not multiplied by deg = {bundle.degree_at(z)}",
                    )
                )

    violations.extend(_lam_violations(bundle))
    for v in base.tree.vertices:
        z = bundle.embed.get(v)
        if z is None or not cover.tree.is_vertex(z):
            violations.append(
                Violation(code="embed", subject=v, message="vertex has no essential preimage")
            )
        elif bundle.lam.get(z) != v:
            violations.append(
                Violation(
                    code="embed", subject=v, message=f"lam({z}) = {bundle.lam.get(z)}, not {v}"
                )
            )
    essential = bundle.essential()
    for z in sorted(bundle.critical() - essential):
        image = bundle.lam.get(z)
        if image is not None and base.tree.is_vertex(image):
            violations.append(
                Violation(
                    code="lambda",
                    subject=z,
                    message=f"critical non-essential vertex retracts to vertex {image}",
                )
            )
    for z in cover.tree.vertices:
        if z in essential or z in bundle.critical() or z not in bundle.lam:
            continue
        for x in cover.tree.outgoing(z):
            if geometric_name(x) not in bundle.lam:
                continue
            if _sd_image(bundle, bundle.retract(x)) != _sd_image(bundle, bundle.lam[z]):
                violations.append(
                    Violation(
                        code="lambda",
                        subject=x,
                        message=f"edge at passive vertex {z} retracts to "
                        f"{bundle.retract(x)}, not {bundle.lam[z]}",
                    )
                )

    orders: dict[str, int] = {}
    if not violations:
        orders = derive_ord(bundle)
        for v, order in orders.items():
            given = base.ord.get(v)
            if given is not None and given != order:
                violations.append(
                    Violation(
                        code="ord",
                        subject=v,
                        message=f"given order {_fmt(given)} differs from derived {_fmt(order)}",
                    )
                )
        for z in cover.tree.vertices:
            order = orders[dynamics(z)]
            if order != INFINITE and order % bundle.degree_at(z):
                violations.append(
                    Violation(
                        code="ord",
                        subject=z,
                        message=f"ord(p({z})) = {order} is not divisible by {bundle.degree_at(z)}",
                    )
                )

    details = {
        "degree": str(degree),
        "essential": ",".join(sorted(essential)),
        "critical": ",".join(sorted(bundle.critical())),
    }
    details.update({f"a:{z}": str(a) for z, a in offsets.items() if a is not None})
    details.update({f"ord:{v}": _fmt(o) for v, o in orders.items()})
    report = ValidationReport.from_violations("bundle", bundle.name, violations, details)
    logger.debug(f"validate_bundle: {report.summary()}")
    return report


def _fmt(order: int) -> str:
    return "inf" if order == INFINITE else str(order)


def rounded_index(angle: Fraction, offset: Fraction, degree: int) -> int:
    """Index ``t`` of the grid point ``(t - a) / deg`` of ``B_z`` at or below ``angle``."""
    return floor(degree * angle + offset)
