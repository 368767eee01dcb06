"""
Presentations of fundamental groups of graphs of groups.

Given a basepoint and a spanning tree, ``pi1(gog, base)`` is generated by the
vertex groups (conjugated into the basepoint along tree paths) and one
stable letter per geometric edge outside the tree. Cyclic edge groups add
the relators ``c^- (c^+)^-1`` for tree edges and ``s^-1 c^- s (c^+)^-1`` for
stable letters ``s``. With trivial edge groups the presentation is a free
product of cyclic groups and ``to_word`` gives exact normal forms.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable
from dataclasses import dataclass

from ..algebra import INFINITE, CyclicFactor, FpGroup, Word
from ..errors import StructureError
from ..logging import logger
from .gog import GraphOfGroups
from .graph import geometric_name
from .paths import PathWord


def bfs_tree(gog: GraphOfGroups, base: str) -> frozenset[str]:
    """Breadth-first spanning tree from ``base``, edges visited in name order."""
    graph = gog.graph
    if not graph.is_connected():
        raise StructureError(f"Graph of groups {gog.name or ''} is not connected")
    seen = {base}
    tree: set[str] = set()
    queue = deque([base])
    while queue:
        vertex = queue.popleft()
        for x in graph.outgoing(vertex):
            target = graph.terminus(x)
            if target not in seen:
                seen.add(target)
                tree.add(geometric_name(x))
                queue.append(target)
    return frozenset(tree)


def tree_paths(gog: GraphOfGroups, base: str, tree: Iterable[str]) -> dict[str, tuple[str, ...]]:
    """Oriented edge sequence of the tree path from ``base`` to every vertex."""
    graph = gog.graph
    tree = set(tree)
    paths: dict[str, tuple[str, ...]] = {base: ()}
    queue = deque([base])
    while queue:
        vertex = queue.popleft()
        for x in graph.outgoing(vertex):
            target = graph.terminus(x)
            if geometric_name(x) in tree and target not in paths:
                paths[target] = paths[vertex] + (x,)
                queue.append(target)
    return paths


@dataclass(frozen=True)
class Pi1Presentation:
    """``pi1(gog, base)`` as a free product of cyclics plus relators."""

    gog: GraphOfGroups
    base: str
    tree: frozenset[str]
    group: FpGroup
    relators: tuple[Word, ...]
    vertex_factors: dict[tuple[str, int], int]
    stable_letters: dict[str, int]
    paths: dict[str, tuple[str, ...]]

    def tree_path(self, vertex: str) -> PathWord:
        """Path from the basepoint to ``vertex`` along the tree."""
        return PathWord.from_sequence(self.gog, self.base, list(self.paths[vertex]))

    def vertex_word(self, vertex: str, element: Word) -> Word:
        syllables = [(self.vertex_factors[(vertex, i)], e) for i, e in element.syllables]
        return self.group.word(syllables)

    def generator_loops(self) -> dict[str, PathWord]:
        """Every generator of ``group`` as a reduced loop at the basepoint."""
        loops = {}
        for (vertex, index), factor in self.vertex_factors.items():
            element = self.gog.group(vertex).generator(index)
            to_vertex = self.tree_path(vertex)
            loop = to_vertex.then(PathWord.at(self.gog, vertex, element), self.gog)
            back = to_vertex.inverse(self.gog)
            loops[self.group.factors[factor].name] = loop.then(back, self.gog)
        graph = self.gog.graph
        for edge, factor in self.stable_letters.items():
            to_origin = self.tree_path(graph.origin(edge))
            from_terminus = self.tree_path(graph.terminus(edge)).inverse(self.gog)
            loop = to_origin.append(self.gog, edge).then(from_terminus, self.gog)
            loops[self.group.factors[factor].name] = loop
        return loops

    def to_word(self, path: PathWord) -> Word:
        """Image of a loop at the basepoint.

        Tree edges vanish and the other edges become stable letters.
        """
        path.validate(self.gog)
        if path.start != self.base or path.end(self.gog) != self.base:
            raise ValueError("Only loops at the basepoint have a pi1 image")
        graph = self.gog.graph
        syllables = [(self.vertex_factors[(self.base, i)], e) for i, e in path.head.syllables]
        for x, g in path.steps:
            name = geometric_name(x)
            if name not in self.tree:
                syllables.append((self.stable_letters[name], -1 if x != name else 1))
            vertex = graph.terminus(x)
            syllables.extend((self.vertex_factors[(vertex, i)], e) for i, e in g.syllables)
        return self.group.word(syllables)

    def is_free_product(self) -> bool:
        return not self.relators


def pi1_presentation(
    gog: GraphOfGroups, base: str, tree: Iterable[str] | None = None
) -> Pi1Presentation:
    """Presentation of ``pi1(gog, base)``.

    Raises:
        StructureError: if the graph is disconnected or ``tree`` is not a spanning tree.
    """
    graph = gog.graph
    if not graph.is_vertex(base):
        raise StructureError(f"Basepoint {base!r} is not a vertex")
    if tree is None:
        tree = bfs_tree(gog, base)
    else:
        tree = frozenset(tree)
        if not graph.is_connected():
            raise StructureError("Graph of groups is not connected")
        unknown = tree - set(graph.geometric_edges())
        if unknown or len(tree) != len(graph.vertices) - 1:
            raise StructureError(f"Edges {sorted(tree)} do not form a spanning tree")
    paths = tree_paths(gog, base, tree)
    if len(paths) != len(graph.vertices):
        raise StructureError(f"Edges {sorted(tree)} do not form a spanning tree")

    raw: list[tuple[str, int, tuple[str, int] | str]] = []
    for vertex in graph.vertices:
        for index, factor in enumerate(gog.vertex_groups[vertex].factors):
            if factor.order != 1:
                raw.append((factor.name, factor.order, (vertex, index)))
    for edge in graph.geometric_edges():
        if edge not in tree:
            raw.append((gog.label(edge), INFINITE, edge))
    counts = Counter(name for name, _, _ in raw)

    factors = []
    vertex_factors: dict[tuple[str, int], int] = {}
    stable: dict[str, int] = {}
    for name, order, key in raw:
        if isinstance(key, tuple):
            if counts[name] > 1:
                name = f"{key[0]}_{name}"
            vertex_factors[key] = len(factors)
        else:
            if counts[name] > 1:
                name = f"{key}_{name}"
            stable[key] = len(factors)
        factors.append(CyclicFactor(name, order))
    group = FpGroup(tuple(factors), name=f"pi1({gog.name or 'gog'}, {base})")

    presentation = Pi1Presentation(
        gog, base, frozenset(tree), group, (), vertex_factors, stable, paths
    )
    relators = []
    for edge in graph.edges:
        if gog.edge_image(edge.name) is None:
            continue
        minus = presentation.vertex_word(edge.origin, gog.edge_image(edge.name))
        plus = presentation.vertex_word(edge.terminus, gog.edge_image(f"~{edge.name}"))
        if edge.name in tree:
            relators.append(minus * plus.inverse())
        else:
            s = group.generator(stable[edge.name])
            relators.append(s.inverse() * minus * s * plus.inverse())
    logger.debug(
        f"pi1_presentation: {len(factors)} generators, {len(relators)} relators, "
        f"tree {sorted(tree)}"
    )
    return Pi1Presentation(
        gog, base, frozenset(tree), group, tuple(relators), vertex_factors, stable, paths
    )
