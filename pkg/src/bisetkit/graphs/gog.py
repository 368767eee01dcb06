"""
Graphs of groups.

A graph of groups assigns a group to every object of a graph, with
``G_e == G_~e``, and a monomorphism ``G_x -> G_{x^-}`` for every object
(the identity on vertices). Edge groups are trivial or cyclic; cyclic edge
groups are injective when the image of the generator has the same order.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from ..algebra import FpGroup, Homomorphism, Word, word_order
from ..models.reports import ValidationReport, Violation
from .graph import Edge, Graph, geometric_name


@dataclass(frozen=True)
class EdgeSpec:
    """Input record for ``GraphOfGroups.build``."""

    name: str
    origin: str
    terminus: str
    group: FpGroup | None = None
    into_minus: Mapping[str, Word] | None = None
    into_plus: Mapping[str, Word] | None = None
    label: str | None = None


@dataclass(frozen=True)
class GraphOfGroups:
    graph: Graph
    vertex_groups: Mapping[str, FpGroup]
    edge_groups: Mapping[str, FpGroup] = field(default_factory=dict)
    into_minus: Mapping[str, Homomorphism] = field(default_factory=dict)
    into_plus: Mapping[str, Homomorphism] = field(default_factory=dict)
    labels: Mapping[str, str] = field(default_factory=dict)
    name: str = field(default="", compare=False)

    @classmethod
    def build(
        cls,
        vertices: Mapping[str, FpGroup],
        edges: Iterable[EdgeSpec] = (),
        name: str = "",
        provenance: Mapping[str, str] | None = None,
    ) -> GraphOfGroups:
        """Assemble a graph of groups; edges default to the trivial group."""
        specs = list(edges)
        graph = Graph(
            tuple(vertices),
            tuple(Edge(s.name, s.origin, s.terminus) for s in specs),
            dict(provenance or {}),
        )
        edge_groups = {}
        minus = {}
        plus = {}
        labels = {}
        for spec in specs:
            group = spec.group or FpGroup.trivial()
            edge_groups[spec.name] = group
            minus[spec.name] = Homomorphism.from_mapping(
                group, vertices[spec.origin], dict(spec.into_minus or {})
            )
            plus[spec.name] = Homomorphism.from_mapping(
                group, vertices[spec.terminus], dict(spec.into_plus or {})
            )
            if spec.label:
                labels[spec.name] = spec.label
        return cls(graph, dict(vertices), edge_groups, minus, plus, labels, name)

    def group(self, x: str) -> FpGroup:
        if self.graph.is_vertex(x):
            return self.vertex_groups[x]
        return self.edge_groups[self.graph.edge(x).name]

    def edge_map(self, x: str) -> Homomorphism:
        """The monomorphism ``G_x -> G_{x^-}``."""
        if self.graph.is_vertex(x):
            return Homomorphism.identity(self.vertex_groups[x])
        edge = self.graph.edge(x)
        return self.into_plus[edge.name] if x != edge.name else self.into_minus[edge.name]

    def edge_image(self, x: str) -> Word | None:
        """Image in ``G_{x^-}`` of the generator of a cyclic edge group (``None`` if trivial)."""
        group = self.group(x)
        factors = [i for i, f in enumerate(group.factors) if f.order != 1]
        if not factors:
            return None
        return self.edge_map(x)(group.generator(factors[0]))

    def label(self, edge: str) -> str:
        name = geometric_name(edge)
        return self.labels.get(name, name)

    def validate(self) -> ValidationReport:
        violations: list[Violation] = []
        if not self.graph.is_connected():
            violations.append(
                Violation(code="connected", subject=self.name, message="graph is not connected")
            )
        for vertex in self.graph.vertices:
            if vertex not in self.vertex_groups:
                violations.append(
                    Violation(code="group", subject=vertex, message="vertex has no group")
                )
        for edge in self.graph.edges:
            group = self.edge_groups.get(edge.name)
            if group is None:
                violations.append(
                    Violation(code="group", subject=edge.name, message="edge has no group")
                )
                continue
            nontrivial = [f for f in group.factors if f.order != 1]
            if len(nontrivial) > 1:
                violations.append(
                    Violation(
                        code="edge_group",
                        subject=edge.name,
                        message=f"edge group {group} is not cyclic",
                    )
                )
                continue
            for side, hom, end in (
                ("minus", self.into_minus.get(edge.name), edge.origin),
                ("plus", self.into_plus.get(edge.name), edge.terminus),
            ):
                if hom is None or hom.source != group or hom.target != self.vertex_groups.get(end):
                    violations.append(
                        Violation(
                            code="edge_map",
                            subject=edge.name,
                            message=f"{side} map does not go {group} -> G_{end}",
                        )
                    )
                    continue
                for message in hom.violations():
                    violations.append(
                        Violation(code="edge_map", subject=edge.name, message=message)
                    )
                if nontrivial:
                    image = hom(group.generator(group.factors.index(nontrivial[0])))
                    order = word_order(image)
                    if order != nontrivial[0].order:
                        violations.append(
                            Violation(
                                code="injective",
                                subject=edge.name,
                                message=f"{side} image {image} has order {order}, "
                                f"not {nontrivial[0].order}",
                            )
                        )
        return ValidationReport.from_violations("gog", self.name, violations)
