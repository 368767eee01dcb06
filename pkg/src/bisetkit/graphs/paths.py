"""
Decorated paths in a graph of groups and their reduced normal form.

A path ``(g_0, x_1, g_1, ..., x_n, g_n)`` alternates group elements and
oriented edges, with ``g_i`` in the group of the vertex ``x_i^+ = x_{i+1}^-``.
Paths are subject to the relations

    (g)^- x = x (g)^+          for g in G_x,
    x 1 ~x = 1                 (backtracking),

and a reduced path has no backtrack ``x_i g_i ~x_i`` with ``g_i`` in the
image of ``G_{x_i}``. The normal form additionally chooses, from left to
right, the shortlex-least representative of each ``g_{i-1}`` modulo the
image of ``G_{x_i}`` and pushes the rest across the edge.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..algebra import Word, coset_representative, is_power_of
from .gog import GraphOfGroups

Step = tuple[str, Word]


@dataclass(frozen=True)
class PathWord:
    """Path from ``start`` to ``end``: ``head`` then ``(x_i, g_i)`` steps."""

    start: str
    head: Word
    steps: tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def edges(self) -> tuple[str, ...]:
        return tuple(x for x, _ in self.steps)

    def end(self, gog: GraphOfGroups) -> str:
        return gog.graph.terminus(self.steps[-1][0]) if self.steps else self.start

    @classmethod
    def at(cls, gog: GraphOfGroups, vertex: str, element: Word | None = None) -> PathWord:
        return cls(vertex, element if element is not None else gog.group(vertex).identity())

    @classmethod
    def from_sequence(
        cls, gog: GraphOfGroups, start: str, items: Sequence[str | Word]
    ) -> PathWord:
        """Build from a mixed sequence of objects and words, merging vertex letters.

        Group words attach to the current vertex; an edge moves to its
        terminus; a vertex object must equal the current vertex.
        """
        head = gog.group(start).identity()
        steps: list[Step] = []
        current = start
        for item in items:
            if isinstance(item, Word):
                if steps:
                    x, g = steps[-1]
                    steps[-1] = (x, g * item)
                else:
                    head = head * item
            elif gog.graph.is_vertex(item):
                if item != current:
                    raise ValueError(
                        f"Vertex letter {item} does not match current vertex {current}"
                    )
            else:
                if gog.graph.origin(item) != current:
                    raise ValueError(f"Edge {item} does not start at {current}")
                current = gog.graph.terminus(item)
                steps.append((item, gog.group(current).identity()))
        return cls(start, head, tuple(steps))

    def then(self, other: PathWord, gog: GraphOfGroups) -> PathWord:
        if self.end(gog) != other.start:
            raise ValueError("Paths are not composable")
        if not self.steps:
            return PathWord(self.start, self.head * other.head, other.steps)
        steps = list(self.steps)
        x, g = steps[-1]
        steps[-1] = (x, g * other.head)
        return PathWord(self.start, self.head, tuple(steps) + other.steps)

    def append(self, gog: GraphOfGroups, item: str | Word) -> PathWord:
        return self.then(PathWord.from_sequence(gog, self.end(gog), [item]), gog)

    def inverse(self, gog: GraphOfGroups) -> PathWord:
        elements = [self.head] + [g for _, g in self.steps]
        edges = [x for x, _ in self.steps]
        start = self.end(gog)
        head = elements[-1].inverse()
        steps = []
        for i in range(len(edges) - 1, -1, -1):
            steps.append((gog.graph.reverse(edges[i]), elements[i].inverse()))
        return PathWord(start, head, tuple(steps))

    def validate(self, gog: GraphOfGroups) -> None:
        """Raise ``ValueError`` if endpoints or decorations are inconsistent."""
        current = self.start
        if self.head.group != gog.group(current):
            raise ValueError(f"Head {self.head} is not in the group of {current}")
        for x, g in self.steps:
            if gog.graph.origin(x) != current:
                raise ValueError(f"Edge {x} does not start at {current}")
            current = gog.graph.terminus(x)
            if g.group != gog.group(current):
                raise ValueError(f"Decoration {g} is not in the group of {current}")

    def format(self) -> str:
        parts = [str(self.head)]
        for x, g in self.steps:
            parts.extend([x, str(g)])
        return "(" + ", ".join(parts) + ")"


def _edge_preimage(gog: GraphOfGroups, x: str, g: Word) -> Word | None:
    """Element c of G_x with (c)^- == g, or None when g is not in the image."""
    group = gog.group(x)
    image = gog.edge_image(x)
    if image is None:
        return group.identity() if g.is_identity() else None
    k = is_power_of(g, image)
    if k is None:
        return None
    index = next(i for i, f in enumerate(group.factors) if f.order != 1)
    return group.word([(index, k)])


def reduce_path(path: PathWord, gog: GraphOfGroups) -> PathWord:
    """Reduced normal form of a decorated path.

    Raises:
        ValueError: if the path is not endpoint-consistent.
    """
    path.validate(gog)
    graph = gog.graph
    elements = [path.head] + [g for _, g in path.steps]
    edges = [x for x, _ in path.steps]

    changed = True
    while changed:
        changed = False
        for i in range(len(edges) - 1):
            if edges[i + 1] != graph.reverse(edges[i]):
                continue
            # elements[i + 1] sits between x_i and ~x_i, in G_{x_i^+}.
            c = _edge_preimage(gog, graph.reverse(edges[i]), elements[i + 1])
            if c is None:
                continue
            merged = elements[i] * gog.edge_map(edges[i])(c) * elements[i + 2]
            elements[i : i + 3] = [merged]
            del edges[i : i + 2]
            changed = True
            break

    for i, x in enumerate(edges):
        image = gog.edge_image(x)
        if image is None:
            continue
        representative, k = coset_representative(elements[i], image)
        elements[i] = representative
        # g = r * u**-k and u**-k * x = x * (c**-k)^+.
        c = _edge_preimage(gog, x, image ** (-k))
        assert c is not None
        elements[i + 1] = gog.edge_map(graph.reverse(x))(c) * elements[i + 1]
    return PathWord(path.start, elements[0], tuple(zip(edges, elements[1:])))
