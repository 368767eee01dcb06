"""
Graph morphisms.

A morphism ``theta: G -> H`` is given on vertices and geometric edges; it is
extended to reversed edges by ``theta(~e) = rev(theta(e))``. Edges may be
sent to vertices (the edge is absorbed); the morphism is simplicial when
no edge is absorbed.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from ..errors import StructureError
from .graph import Graph, geometric_name


@dataclass(frozen=True)
class GraphMorphism:
    source: Graph
    target: Graph
    mapping: Mapping[str, str]
    name: str = field(default="", compare=False)

    @classmethod
    def identity(cls, graph: Graph) -> GraphMorphism:
        return cls(graph, graph, {x: x for x in graph.vertices + tuple(graph.geometric_edges())})

    def __call__(self, x: str) -> str:
        if self.source.is_vertex(x):
            return self.mapping[x]
        name = geometric_name(x)
        image = self.mapping[self.source.edge(x).name]
        return image if x == name else self.target.reverse(image)

    def problems(self) -> list[str]:
        """Ways in which the map fails to be a graph morphism."""
        problems = []
        for x in self.source.vertices + tuple(self.source.geometric_edges()):
            if x not in self.mapping:
                problems.append(f"{self.name or 'morphism'} does not map {x}")
            elif not self.target.has_object(self.mapping[x]):
                problems.append(f"{x} maps to unknown object {self.mapping[x]!r}")
        if problems:
            return problems
        for v in self.source.vertices:
            if not self.target.is_vertex(self.mapping[v]):
                problems.append(f"vertex {v} maps to edge {self.mapping[v]}")
        for x in self.source.oriented_edges():
            image = self(x)
            if self.target.origin(image) != self(self.source.origin(x)):
                problems.append(
                    f"origin of {x} maps to {self(self.source.origin(x))}, "
                    f"but {image} starts at {self.target.origin(image)}"
                )
        return problems

    def check(self) -> None:
        """Raise ``StructureError`` unless the map is a graph morphism."""
        problems = self.problems()
        if problems:
            raise StructureError("; ".join(problems))

    def is_simplicial(self) -> bool:
        return all(not self.target.is_vertex(self(e)) for e in self.source.geometric_edges())

    def is_isomorphism(self) -> bool:
        if not self.is_simplicial():
            return False
        vertices = [self.mapping[v] for v in self.source.vertices]
        edges = {geometric_name(self(e)) for e in self.source.geometric_edges()}
        return (
            sorted(vertices) == sorted(self.target.vertices)
            and len(edges) == len(self.source.edges) == len(self.target.edges)
        )

    def preimage(self, y: str) -> list[str]:
        """Source objects (vertices and oriented edges) mapping to ``y``."""
        return [x for x in self.source.objects() if self(x) == y]

    def then(self, other: GraphMorphism) -> GraphMorphism:
        """Composite ``x -> other(self(x))``."""
        return GraphMorphism(
            self.source,
            other.target,
            {x: other(self.mapping[x]) for x in self.mapping},
        )
