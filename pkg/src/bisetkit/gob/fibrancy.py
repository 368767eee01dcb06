"""
Left-fibrancy of graphs of bisets.

For a carrier vertex ``v`` and an edge ``f`` of ``X`` leaving ``rho(v)``,
the edges ``e`` of the carrier leaving ``v`` over ``f`` must decompose
``B_v``:

    ⊔_e  G_lam(v) (x) B_e  ->  B_v,     g (x) b -> g * b^-

is a bijection. With left-free bisets this says that ``s_j -> (s_j)^- = k * s_i``
matches the bases of the ``B_e`` one-to-one with the basis of ``B_v``; the
table then records ``s_i = k**-1 * (s_j)^-`` for every basis element of
``B_v``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from ..algebra import Word
from ..bisets import CyclicBiset, TableBiset
from ..errors import StructureError
from ..logging import logger
from .model import GraphOfBisets


@dataclass(frozen=True)
class Decomposition:
    """``s_i = word * (s_index of B_edge)^-``."""

    edge: str
    index: int
    word: Word


@dataclass(frozen=True)
class FibrantTable:
    entries: Mapping[tuple[str, str], tuple[Decomposition, ...]] = field(default_factory=dict)

    def lookup(self, vertex: str, edge: str, index: int) -> Decomposition:
        try:
            return self.entries[(vertex, edge)][index]
        except (KeyError, IndexError):
            raise StructureError(
                f"Fibrant table has no decomposition of basis {index} of {vertex} along {edge}"
            )

    def problems(self, gob: GraphOfBisets) -> list[str]:
        """Why this table does not witness left-fibrancy of ``gob``."""
        problems = []
        for vertex in gob.carrier.vertices:
            for f in gob.right.graph.outgoing(gob.rho(vertex)):
                rows = self.entries.get((vertex, f))
                over = [e for e in gob.carrier.outgoing(vertex) if gob.rho(e) == f]
                expected = sum(gob.degree(e) for e in over)
                if rows is None or len(rows) != gob.degree(vertex) or expected != len(rows):
                    problems.append(f"{vertex} along {f}: wrong number of decompositions")
                    continue
                used = set()
                for i, row in enumerate(rows):
                    if row.edge not in over or not 0 <= row.index < gob.degree(row.edge):
                        problems.append(f"{vertex} along {f}: {row.edge} is not an edge over {f}")
                        continue
                    k, j = gob.to_origin(row.edge, row.index)
                    if j != i or not (row.word * k).is_identity():
                        problems.append(
                            f"{vertex} along {f}: basis {i} is not {row.word} * "
                            f"({row.edge}:{row.index})^-"
                        )
                    used.add((row.edge, row.index))
                if len(used) != len(rows):
                    problems.append(f"{vertex} along {f}: an edge element is used twice")
        return problems


@dataclass(frozen=True)
class FibrancyCheck:
    """Outcome of ``check_left_fibrant``: a table, or the first failing vertex and edge."""

    table: FibrantTable | None
    left_free: bool
    vertex: str | None = None
    edge: str | None = None
    counterexample: str | None = None

    @property
    def fibrant(self) -> bool:
        return self.table is not None


def _is_left_free(gob: GraphOfBisets) -> bool:
    for biset in gob.bisets.values():
        if isinstance(biset, TableBiset) and not biset.is_left_free():
            return False
    return True


def _degree_mismatch(gob: GraphOfBisets, vertex: str, over: list[str]) -> str | None:
    """Degree bookkeeping: the edge bisets over ``f`` must add up to ``B_v``."""
    total = sum(gob.degree(e) for e in over)
    if total == gob.degree(vertex):
        return None
    kind = "cyclic " if isinstance(gob.biset(vertex), CyclicBiset) else ""
    return (
        f"edges {over or '[]'} have total degree {total}, "
        f"but the {kind}biset of {vertex} has degree {gob.degree(vertex)}"
    )


def check_left_fibrant(gob: GraphOfBisets) -> FibrancyCheck:
    """Decide left-fibrancy and synthesize the decomposition table.

    Raises:
        StructureError: if ``rho`` is not simplicial.
    """
    if not gob.rho.is_simplicial():
        absorbed = [
            e for e in gob.carrier.geometric_edges() if gob.right.graph.is_vertex(gob.rho(e))
        ]
        raise StructureError(f"rho is not simplicial: edges {absorbed} map to vertices")
    left_free = _is_left_free(gob)
    entries: dict[tuple[str, str], tuple[Decomposition, ...]] = {}
    for vertex in gob.carrier.vertices:
        for f in gob.right.graph.outgoing(gob.rho(vertex)):
            over = [e for e in gob.carrier.outgoing(vertex) if gob.rho(e) == f]
            mismatch = _degree_mismatch(gob, vertex, over)
            if mismatch:
                logger.debug(f"check_left_fibrant: {vertex} along {f}: {mismatch}")
                return FibrancyCheck(None, left_free, vertex, f, mismatch)
            rows: dict[int, Decomposition] = {}
            for e in over:
                for j in range(gob.degree(e)):
                    k, i = gob.to_origin(e, j)
                    if i in rows:
                        message = (
                            f"basis {i} of {vertex} is hit by both "
                            f"{rows[i].edge}:{rows[i].index} and {e}:{j}"
                        )
                        return FibrancyCheck(None, left_free, vertex, f, message)
                    rows[i] = Decomposition(e, j, k.inverse())
            entries[(vertex, f)] = tuple(rows[i] for i in range(gob.degree(vertex)))
    logger.debug(f"check_left_fibrant: {len(entries)} decompositions for {gob.name or '<unnamed>'}")
    return FibrancyCheck(FibrantTable(entries), left_free)


def is_left_fibrant(gob: GraphOfBisets) -> FibrantTable | None:
    return check_left_fibrant(gob).table
