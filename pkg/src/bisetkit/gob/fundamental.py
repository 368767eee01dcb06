"""
Fundamental bisets of left-fibrant graphs of bisets.

For basepoints ``dagger`` of ``Y`` and ``star`` of ``X`` the fundamental
biset is left-free with basis

    { T(lam(z)) (x) s  :  z in rho^-1(star),  s a basis element of B_z }

where ``T(y)`` is the spanning-tree path from ``dagger`` to ``y``. A loop of
``X`` at ``star`` acts letter by letter on ``q (x) s`` (``q`` a path of ``Y``
ending at ``lam(z)``):

- a vertex letter ``g`` uses the right action of ``B_z``: ``s * g = h * s'``
  and ``q`` becomes ``q h``;
- an edge letter ``f`` decomposes ``s = g * (b)^-`` with ``b`` in ``B_e``,
  ``rho(e) = f``, and uses ``b^- * rho(e) = lam(e) * b^+``: ``q`` becomes
  ``q g lam(e) k`` where ``b^+ = k * s'`` in ``B_{e^+}``.

At the end ``q = (q T(lam(z'))^-1) T(lam(z'))`` and the loop in brackets is
the decoration in ``pi1(Y, dagger)``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..algebra import Word
from ..bisets import DecoratedPermutation, WreathBiset, wreath_validate
from ..errors import StructureError
from ..graphs import PathWord, Pi1Presentation, pi1_presentation
from ..logging import logger
from .fibrancy import FibrantTable, check_left_fibrant
from .model import GraphOfBisets
from .validation import validate_gob


@dataclass(frozen=True)
class BasisEntry:
    """Basis element ``path (x) s_index`` of the fundamental biset, ``s`` in ``B_vertex``."""

    vertex: str
    index: int
    label: str
    path: PathWord


@dataclass(frozen=True)
class FundamentalBiset:
    biset: WreathBiset
    basis: tuple[BasisEntry, ...]
    left: Pi1Presentation
    right: Pi1Presentation
    max_path_length: int

    @property
    def degree(self) -> int:
        return self.biset.degree


@dataclass
class _Lift:
    path: PathWord
    vertex: str
    index: int


class _Lifter:
    def __init__(
        self,
        gob: GraphOfBisets,
        table: FibrantTable,
        left: Pi1Presentation,
        basis: tuple[BasisEntry, ...],
    ) -> None:
        self.gob = gob
        self.table = table
        self.left = left
        self.position = {(entry.vertex, entry.index): n for n, entry in enumerate(basis)}
        self.basis = basis

    def _act_element(self, state: _Lift, g: Word) -> None:
        if g.is_identity():
            return
        h, j = self.gob.wreath(state.vertex).act(state.index, g)
        state.path = state.path.append(self.gob.left, h)
        state.index = j

    def _cross(self, state: _Lift, f: str) -> None:
        gob = self.gob
        row = self.table.lookup(state.vertex, f, state.index)
        state.path = state.path.append(gob.left, row.word)
        lam = gob.lam(row.edge)
        if not gob.left.graph.is_vertex(lam):
            state.path = state.path.append(gob.left, lam)
        k, j = gob.to_terminus(row.edge, row.index)
        state.path = state.path.append(gob.left, k)
        state.vertex = gob.carrier.terminus(row.edge)
        state.index = j

    def lift(self, loop: PathWord) -> tuple[list[Word], list[int], int]:
        """Decorations, permutation and longest lifted path of one loop at the basepoint."""
        decorations = []
        perm = []
        longest = 0
        for entry in self.basis:
            state = _Lift(entry.path, entry.vertex, entry.index)
            self._act_element(state, loop.head)
            for f, g in loop.steps:
                self._cross(state, f)
                self._act_element(state, g)
            longest = max(longest, len(state.path))
            if (state.vertex, state.index) not in self.position:
                raise StructureError(
                    f"Lift of {loop.format()} from {entry.label} ends at {state.vertex}, "
                    "which does not lie over the basepoint"
                )
            target = self.position[(state.vertex, state.index)]
            back = self.basis[target].path.inverse(self.gob.left)
            decorations.append(self.left.to_word(state.path.then(back, self.gob.left)))
            perm.append(target)
        return decorations, perm, longest


def fundamental_biset(
    gob: GraphOfBisets,
    dagger: str,
    star: str,
    fib: FibrantTable | None = None,
    jobs: int = 1,
) -> FundamentalBiset:
    """Wreath recursion of ``pi1(gob, dagger, star)`` over ``pi1(Y, dagger)`` and ``pi1(X, star)``.

    The left and right groups of the returned biset are the free products of
    vertex groups and stable letters. When edge groups are non-trivial (as in
    matings) the edge relators are not part of those groups: they are kept in
    ``FundamentalBiset.left.relators`` and ``right.relators``, and
    ``WreathBiset`` equality compares decorations before dividing them out.

    Raises:
        StructureError: if the graph of bisets fails validation or is not
            left-fibrant, the supplied table is inconsistent, the lift is not a
            permutation of the basis, or (without edge relators) the recursion
            violates a relation of the right group.
    """
    if not gob.left.graph.is_vertex(dagger):
        raise StructureError(f"{dagger!r} is not a vertex of the left graph of groups")
    if not gob.right.graph.is_vertex(star):
        raise StructureError(f"{star!r} is not a vertex of the right graph of groups")
    report = validate_gob(gob)
    if not report.valid:
        raise StructureError(f"Invalid graph of bisets: {report.summary()}")
    if fib is None:
        check = check_left_fibrant(gob)
        if check.table is None:
            raise StructureError(f"Graph of bisets is not left-fibrant: {check.counterexample}")
        fib = check.table
    else:
        problems = fib.problems(gob)
        if problems:
            raise StructureError(f"Fibrant table rejected: {problems[0]}")

    left = pi1_presentation(gob.left, dagger)
    right = pi1_presentation(gob.right, star)
    basis = []
    for z in gob.vertices_over(star):
        path = left.tree_path(gob.lam(z))
        labels = gob.wreath(z).basis
        for i in range(gob.degree(z)):
            basis.append(BasisEntry(z, i, f"{z}:{labels[i]}", path))
    if not basis:
        raise StructureError(f"No carrier vertex lies over {star}")
    basis_tuple = tuple(basis)

    loops = right.generator_loops()
    generators = right.group.generator_names
    lifter = _Lifter(gob, fib, left, basis_tuple)
    if jobs > 1 and len(generators) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda name: lifter.lift(loops[name]), generators))
    else:
        rows = [lifter.lift(loops[name]) for name in generators]

    recursion = []
    for name, (decorations, perm, _) in zip(generators, rows):
        if sorted(perm) != list(range(len(basis_tuple))):
            raise StructureError(
                f"Lift of {name} is not a permutation of the {len(basis_tuple)} basis elements"
            )
        recursion.append(DecoratedPermutation(tuple(decorations), tuple(perm)))

    biset = WreathBiset(
        left.group,
        right.group,
        len(basis_tuple),
        tuple(recursion),
        tuple(entry.label for entry in basis_tuple),
        gob.name,
    )
    report = wreath_validate(biset)
    if not report.valid:
        if not left.relators:
            raise StructureError(f"Fundamental biset fails validation: {report.summary()}")
        logger.warning(
            "fundamental_biset: relations hold only modulo the edge relators of "
            f"pi1({gob.left.name or 'Y'}): {report.summary()}"
        )
    longest = max((row[2] for row in rows), default=0)
    logger.info(
        f"fundamental_biset: degree {biset.degree} over {len(generators)} generators, "
        f"longest lifted path {longest}"
    )
    return FundamentalBiset(biset, basis_tuple, left, right, longest)
