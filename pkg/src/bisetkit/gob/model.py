"""
Graphs of bisets.

A graph of bisets between graphs of groups ``Y`` (left) and ``X`` (right)
is a carrier graph ``B`` with graph morphisms ``lam: B -> Y`` and
``rho: B -> X``, a ``G_lam(z)``-``G_rho(z)`` biset ``B_z`` for every object,
and congruences

    ()^-   : B_x -> B_{x^-}    (over the edge maps of Y and X)
    reverse: B_e -> B_~e       (an involution; ``B_~e`` is ``B_e``)

All bisets are handled in their wreath presentation, so a congruence is the
list of images of the basis of ``B_x``: ``s_i -> k_i * s'_{j_i}``. Congruences
of vertices are identities and are not stored.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from ..algebra import Homomorphism
from ..bisets import Biset, Congruence, WreathBiset, as_wreath
from ..bisets.congruence import Element
from ..graphs import Edge, Graph, GraphMorphism, GraphOfGroups, geometric_name, reverse_name
from ..logging import logger


@dataclass(frozen=True)
class GraphOfBisets:
    carrier: Graph
    left: GraphOfGroups
    right: GraphOfGroups
    lam: GraphMorphism
    rho: GraphMorphism
    bisets: Mapping[str, Biset]
    minus: Mapping[str, tuple[Element, ...]] = field(default_factory=dict)
    reverse: Mapping[str, tuple[Element, ...]] = field(default_factory=dict)
    name: str = field(default="", compare=False)
    _wreaths: dict[str, WreathBiset] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def biset(self, x: str) -> Biset:
        """Biset of a vertex or (either orientation of) an edge."""
        if self.carrier.is_vertex(x):
            return self.bisets[x]
        return self.bisets[self.carrier.edge(x).name]

    def wreath(self, x: str) -> WreathBiset:
        key = x if self.carrier.is_vertex(x) else self.carrier.edge(x).name
        if key not in self._wreaths:
            self._wreaths[key] = as_wreath(self.bisets[key])
        return self._wreaths[key]

    def degree(self, x: str) -> int:
        return self.wreath(x).degree

    def left_hom(self, x: str) -> Homomorphism:
        """``G_lam(x) -> G_lam(x)^-``."""
        return self.left.edge_map(self.lam(x))

    def right_hom(self, x: str) -> Homomorphism:
        """``G_rho(x) -> G_rho(x)^-``."""
        return self.right.edge_map(self.rho(x))

    def minus_images(self, x: str) -> tuple[Element, ...]:
        if self.carrier.is_vertex(x):
            wreath = self.wreath(x)
            return tuple((wreath.left_group.identity(), i) for i in range(wreath.degree))
        return self.minus[x]

    def reverse_images(self, x: str) -> tuple[Element, ...]:
        wreath = self.wreath(x)
        identity = tuple((wreath.left_group.identity(), i) for i in range(wreath.degree))
        if self.carrier.is_vertex(x):
            return identity
        return self.reverse.get(geometric_name(x), identity)

    def minus_congruence(self, x: str) -> Congruence:
        """``B_x -> B_{x^-}``; raises ``ValueError`` on inconsistent data."""
        return Congruence(
            self.wreath(x),
            self.wreath(self.carrier.origin(x)),
            self.left_hom(x),
            self.right_hom(x),
            self.minus_images(x),
        )

    def reverse_congruence(self, x: str) -> Congruence:
        wreath = self.wreath(x)
        return Congruence(
            wreath,
            wreath,
            Homomorphism.identity(wreath.left_group),
            Homomorphism.identity(wreath.right_group),
            self.reverse_images(x),
        )

    def to_origin(self, x: str, index: int) -> Element:
        """``(s_index)^-`` as an element of ``B_{x^-}``."""
        return self.minus_images(x)[index]

    def to_terminus(self, x: str, index: int) -> Element:
        """``(s_index)^+ = (reverse(s_index))^-`` as an element of ``B_{x^+}``."""
        word, j = self.reverse_images(x)[index]
        return self.minus_congruence(self.carrier.reverse(x)).apply(word, j)

    def is_biprincipal(self) -> bool:
        """``lam`` and ``rho`` are graph isomorphisms and every biset is biprincipal."""
        if not (self.lam.is_isomorphism() and self.rho.is_isomorphism()):
            return False
        for key in self.bisets:
            if not self.wreath(key).is_biprincipal():
                return False
        return True

    def vertices_over(self, vertex: str) -> list[str]:
        """Carrier vertices ``z`` with ``rho(z) == vertex``."""
        return [z for z in self.carrier.vertices if self.rho(z) == vertex]

    def summary(self) -> str:
        return (
            f"gob {self.name or '<unnamed>'}: {len(self.carrier.vertices)} vertices, "
            f"{len(self.carrier.edges)} edges over "
            f"{self.left.name or 'Y'} <- . -> {self.right.name or 'X'}"
        )


class GobBuilder:
    """Incremental construction of a ``GraphOfBisets``.

    Edge congruences default to the identity where the source and target
    bisets have the same degree, which covers the common case of edge
    bisets that are copies of their endpoint bisets.
    """

    def __init__(self, left: GraphOfGroups, right: GraphOfGroups, name: str = "") -> None:
        self.left = left
        self.right = right
        self.name = name
        self._vertices: list[str] = []
        self._edges: list[Edge] = []
        self._lam: dict[str, str] = {}
        self._rho: dict[str, str] = {}
        self._bisets: dict[str, Biset] = {}
        self._minus: dict[str, tuple[Element, ...]] = {}
        self._reverse: dict[str, tuple[Element, ...]] = {}
        self._provenance: dict[str, str] = {}

    def vertex(self, name: str, lam: str, rho: str, biset: Biset) -> GobBuilder:
        self._vertices.append(name)
        self._lam[name] = lam
        self._rho[name] = rho
        self._bisets[name] = biset
        return self

    def edge(
        self,
        name: str,
        origin: str,
        terminus: str,
        lam: str,
        rho: str,
        biset: Biset,
        minus: Sequence[Element] | None = None,
        plus: Sequence[Element] | None = None,
        reverse: Sequence[Element] | None = None,
    ) -> GobBuilder:
        """Add an edge; ``plus`` gives ``()^-`` of the reversed edge ``~name``."""
        self._edges.append(Edge(name, origin, terminus))
        self._lam[name] = lam
        self._rho[name] = rho
        self._bisets[name] = biset
        if minus is not None:
            self._minus[name] = tuple(minus)
        if plus is not None:
            self._minus[reverse_name(name)] = tuple(plus)
        if reverse is not None:
            self._reverse[name] = tuple(reverse)
        return self

    def provenance(self, mapping: Mapping[str, str]) -> GobBuilder:
        self._provenance.update(mapping)
        return self

    def build(self) -> GraphOfBisets:
        carrier = Graph(tuple(self._vertices), tuple(self._edges), dict(self._provenance))
        minus = dict(self._minus)
        for x in carrier.oriented_edges():
            if x in minus:
                continue
            wreath = as_wreath(self._bisets[geometric_name(x)])
            origin = as_wreath(self._bisets[carrier.origin(x)])
            if wreath.degree == origin.degree:
                minus[x] = tuple((origin.left_group.identity(), i) for i in range(wreath.degree))
        gob = GraphOfBisets(
            carrier,
            self.left,
            self.right,
            GraphMorphism(carrier, self.left.graph, dict(self._lam), "lambda"),
            GraphMorphism(carrier, self.right.graph, dict(self._rho), "rho"),
            dict(self._bisets),
            minus,
            dict(self._reverse),
            self.name,
        )
        logger.debug(f"GobBuilder: {gob.summary()}")
        return gob
