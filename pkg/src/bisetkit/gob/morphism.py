"""
Graphs of bisets of morphisms of graphs of groups.

A morphism ``theta: Y -> X`` of graphs of groups is a graph morphism with
homomorphisms ``theta_y: G_y -> G_theta(y)`` commuting with the edge maps:
``()^- . theta_y = theta_{y^-} . ()^-``. Its graph of bisets has carrier
``Y``, ``lam = 1``, ``rho = theta`` and ``B_z = G_theta(z)`` with left action
through ``theta_z``.

``B_z`` is left-free of finite degree in two cases, which are the ones
supported here:

- ``theta_z`` is an isomorphism: ``B_z`` is principal, ``g = <theta_z^-1(g)>``;
- ``G_z`` and ``G_theta(z)`` are cyclic and ``theta_z(t) = t'^a`` with ``a >= 1``
  of index ``a``: ``B_z`` is the cyclic biset of degree ``a``, the element
  ``t'^c`` being ``c/a``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from ..algebra import INFINITE, Homomorphism, Word
from ..bisets import Biset, CyclicBiset, WreathBiset, group_order
from ..bisets.congruence import Element
from ..errors import StructureError
from ..graphs import GraphMorphism, GraphOfGroups, geometric_name
from ..logging import logger
from .model import GobBuilder, GraphOfBisets


@dataclass(frozen=True)
class GogMorphism:
    """Morphism of graphs of groups; ``homs`` is keyed by vertices and geometric edges."""

    source: GraphOfGroups
    target: GraphOfGroups
    graph_map: GraphMorphism
    homs: Mapping[str, Homomorphism]

    @classmethod
    def identity(cls, gog: GraphOfGroups) -> GogMorphism:
        keys = gog.graph.vertices + tuple(gog.graph.geometric_edges())
        return cls(
            gog,
            gog,
            GraphMorphism.identity(gog.graph),
            {x: Homomorphism.identity(gog.group(x)) for x in keys},
        )

    def hom(self, x: str) -> Homomorphism:
        key = x if self.source.graph.is_vertex(x) else geometric_name(x)
        return self.homs[key]

    def problems(self) -> list[str]:
        problems = list(self.graph_map.problems())
        if problems:
            return problems
        for x in self.source.graph.objects():
            hom = self.hom(x)
            image = self.graph_map(x)
            if hom.source != self.source.group(x) or hom.target != self.target.group(image):
                problems.append(f"theta_{x} does not map G_{x} to G_{image}")
                continue
            origin = self.source.graph.origin(x)
            down = self.source.edge_map(x).then(self.hom(origin))
            across = hom.then(self.target.edge_map(image))
            if down != across:
                problems.append(f"theta does not commute with ()^- on {x}")
        return problems

    def then(self, other: GogMorphism) -> GogMorphism:
        """Composite ``other . self``."""
        keys = self.source.graph.vertices + tuple(self.source.graph.geometric_edges())
        return GogMorphism(
            self.source,
            other.target,
            self.graph_map.then(other.graph_map),
            {x: self.hom(x).then(other.hom(self.graph_map(x))) for x in keys},
        )


@dataclass(frozen=True)
class _Twisted:
    """``G_theta(z)`` as a left-free ``G_z``-set, with a locator for its elements."""

    biset: Biset
    inverse: Homomorphism | None = None
    index: int = 1

    def locate(self, element: Word) -> Element:
        if self.inverse is not None:
            return self.inverse(element), 0
        assert isinstance(self.biset, CyclicBiset)
        return self.biset.locate(Fraction(_exponent(element), self.index))


def _exponent(word: Word) -> int:
    return word.syllables[0][1] if word.syllables else 0


def _twisted(hom: Homomorphism, name: str) -> _Twisted:
    inverse = hom.invert()
    if inverse is not None:
        return _Twisted(WreathBiset.from_homomorphism(inverse, name=name), inverse)
    try:
        n, m = group_order(hom.source), group_order(hom.target)
    except ValueError:
        n = m = -1
    if n >= 0 and m != 1:
        a = _exponent(hom.images[0]) if hom.source.factors else m
        if a >= 1 and ((n == INFINITE and m == INFINITE) or (m != INFINITE and m == n * a)):
            biset = CyclicBiset(hom.source, hom.target, a, name=name)
            return _Twisted(biset, None, a)
    raise StructureError(
        f"theta_{name} = {hom} is neither an isomorphism nor a finite-index cyclic embedding"
    )


def gob_of_morphism(theta: GogMorphism, name: str = "") -> GraphOfBisets:
    """The right-principal graph of bisets ``B_theta`` of a morphism ``Y -> X``.

    Raises:
        StructureError: if ``theta`` is not a morphism or some ``B_z`` is not
            left-free of finite degree.
    """
    problems = theta.problems()
    if problems:
        raise StructureError(f"Incompatible morphism: {problems[0]}")
    source = theta.source
    graph = source.graph
    builder = GobBuilder(source, theta.target, name=name)
    twisted = {}
    for v in graph.vertices:
        twisted[v] = _twisted(theta.hom(v), v)
        builder.vertex(v, v, theta.graph_map(v), twisted[v].biset)
    for edge in graph.edges:
        e = edge.name
        twisted[e] = _twisted(theta.hom(e), e)
        images = {}
        for x in (e, graph.reverse(e)):
            # The basis element s_j of B_e is the group element it stands for.
            down = theta.target.edge_map(theta.graph_map(x))
            origin = twisted[graph.origin(x)]
            images[x] = tuple(
                origin.locate(down(_basis_element(twisted[e], j)))
                for j in range(_degree(twisted[e]))
            )
        builder.edge(
            e,
            edge.origin,
            edge.terminus,
            e,
            theta.graph_map(e),
            twisted[e].biset,
            minus=images[e],
            plus=images[graph.reverse(e)],
        )
    gob = builder.build()
    logger.debug(f"gob_of_morphism: built {gob.summary()}")
    return gob


def _degree(twisted: _Twisted) -> int:
    return 1 if twisted.inverse is not None else twisted.index


def _basis_element(twisted: _Twisted, j: int) -> Word:
    group = twisted.biset.right_group
    if j == 0 or not group.factors:
        return group.identity()
    return group.word([(0, j)])


def identity_gob(gog: GraphOfGroups) -> GraphOfBisets:
    """The identity graph of bisets: carrier ``gog``, ``lam = rho = 1``, ``B_z = G_z``."""
    return gob_of_morphism(GogMorphism.identity(gog), name=f"I({gog.name})" if gog.name else "I")
