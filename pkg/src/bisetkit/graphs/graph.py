"""
Graphs with reversal and origin maps.

Objects are vertices and oriented edges. Every geometric edge ``e`` has the
reversed edge ``~e``; ``reverse`` swaps them and fixes vertices, ``origin``
maps an edge to its start and a vertex to itself, so

    x == origin(x)  <=>  x == reverse(x)  <=>  x is a vertex.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import networkx as nx

REVERSED_PREFIX = "~"


def reverse_name(edge: str) -> str:
    if edge.startswith(REVERSED_PREFIX):
        return edge[len(REVERSED_PREFIX) :]
    return REVERSED_PREFIX + edge


def geometric_name(edge: str) -> str:
    return edge[len(REVERSED_PREFIX) :] if edge.startswith(REVERSED_PREFIX) else edge


@dataclass(frozen=True)
class Edge:
    """Geometric edge stored in its canonical orientation."""

    name: str
    origin: str
    terminus: str


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    provenance: Mapping[str, str] = field(default_factory=dict, compare=False)
    _by_name: dict[str, Edge] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("Vertex names must be distinct")
        vertex_set = set(self.vertices)
        for vertex in self.vertices:
            if not vertex or vertex.startswith(REVERSED_PREFIX):
                raise ValueError(f"Invalid vertex name {vertex!r}")
        for edge in self.edges:
            if not edge.name or edge.name.startswith(REVERSED_PREFIX):
                raise ValueError(f"Invalid edge name {edge.name!r}")
            if edge.name in vertex_set or edge.name in self._by_name:
                raise ValueError(f"Duplicate object name {edge.name!r}")
            for end in (edge.origin, edge.terminus):
                if end not in vertex_set:
                    raise ValueError(f"Edge {edge.name} ends at unknown vertex {end!r}")
            self._by_name[edge.name] = edge

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]) -> Graph:
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges))

    def is_vertex(self, x: str) -> bool:
        return x in self.vertices

    def has_object(self, x: str) -> bool:
        return self.is_vertex(x) or geometric_name(x) in self._by_name

    def edge(self, x: str) -> Edge:
        try:
            return self._by_name[geometric_name(x)]
        except KeyError:
            raise ValueError(f"Unknown edge {x!r}")

    def reverse(self, x: str) -> str:
        if self.is_vertex(x):
            return x
        self.edge(x)
        return reverse_name(x)

    def origin(self, x: str) -> str:
        if self.is_vertex(x):
            return x
        edge = self.edge(x)
        return edge.terminus if x.startswith(REVERSED_PREFIX) else edge.origin

    def terminus(self, x: str) -> str:
        return self.origin(self.reverse(x))

    def geometric_edges(self) -> list[str]:
        return [e.name for e in self.edges]

    def oriented_edges(self) -> list[str]:
        return [e.name for e in self.edges] + [reverse_name(e.name) for e in self.edges]

    def objects(self) -> list[str]:
        return list(self.vertices) + self.oriented_edges()

    def outgoing(self, vertex: str) -> list[str]:
        """Oriented edges starting at ``vertex``, sorted by geometric name then orientation."""
        result = [x for x in self.oriented_edges() if self.origin(x) == vertex]
        return sorted(result, key=lambda x: (geometric_name(x), x.startswith(REVERSED_PREFIX)))

    def oriented_between(self, u: str, v: str) -> list[str]:
        return [x for x in self.outgoing(u) if self.terminus(x) == v]

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.origin, edge.terminus, key=edge.name)
        return graph

    def is_connected(self) -> bool:
        return bool(self.vertices) and nx.is_connected(self.to_networkx())

    def is_tree(self) -> bool:
        return bool(self.vertices) and nx.is_tree(self.to_networkx())

    def betti_number(self) -> int:
        components = nx.number_connected_components(self.to_networkx()) if self.vertices else 0
        return len(self.edges) - len(self.vertices) + components
