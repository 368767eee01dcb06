"""
Lifting conjugacy classes through a biset, and the Thurston endomorphism.

For an H-G-biset with ``Φ(g) = <h_1, ..., h_d>σ``, the lift of the class of
g is the multiset of pairs ``(d_j, [k_j])`` over the cycles ``S_j`` of σ,
where ``d_j = |S_j|`` and ``k_j`` is the product of the decorations along the
cycle. The result does not depend on the representative of the class nor on
the basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import Matrix, Rational

from ..algebra import ConjClass, conj_canonical, product
from ..errors import StructureError
from .wreath import WreathBiset


@dataclass(frozen=True)
class LiftTerm:
    degree: int
    conj_class: ConjClass

    def sort_key(self) -> tuple[int, tuple[int, tuple[tuple[int, int, bool], ...]]]:
        return self.degree, self.conj_class.representative.shortlex_key()

    def __str__(self) -> str:
        return f"{self.degree}:{self.conj_class}"


def lift_conjugacy(biset: WreathBiset, conj_class: ConjClass) -> list[LiftTerm]:
    """Lift of a conjugacy class of the right group, sorted by degree then class."""
    if conj_class.representative.group != biset.right_group:
        raise StructureError("Conjugacy class does not live in the right group of the biset")
    entry = biset.image(conj_class.representative)
    terms = []
    for orbit in entry.orbits():
        k = product((entry.decorations[i] for i in orbit), biset.left_group)
        terms.append(LiftTerm(len(orbit), conj_canonical(k)))
    return sorted(terms, key=LiftTerm.sort_key)


@dataclass(frozen=True)
class ThurstonMatrix:
    """Matrix of the Thurston endomorphism on the span of ``classes``.

    Column g holds the lift of ``classes[g]``: entry ``[k, g]`` is the sum of
    ``1/d_j`` over lift terms landing in ``classes[k]``. Lifted classes that
    are missing from ``classes`` are collected in ``extra``.
    """

    classes: tuple[ConjClass, ...]
    matrix: Matrix
    extra: tuple[ConjClass, ...]

    def entry(self, row: int, column: int) -> Fraction:
        value = self.matrix[row, column]
        return Fraction(int(value.p), int(value.q))


def thurston_endomorphism(biset: WreathBiset, classes: list[ConjClass]) -> ThurstonMatrix:
    if biset.left_group != biset.right_group:
        raise StructureError("The Thurston endomorphism needs a G-G-biset")
    if len(set(classes)) != len(classes):
        raise StructureError("Conjugacy classes must be distinct")
    position = {c: i for i, c in enumerate(classes)}
    matrix = Matrix.zeros(len(classes), len(classes))
    extra: list[ConjClass] = []
    for column, conj_class in enumerate(classes):
        for term in lift_conjugacy(biset, conj_class):
            row = position.get(term.conj_class)
            if row is None:
                if term.conj_class not in extra:
                    extra.append(term.conj_class)
                continue
            matrix[row, column] += Rational(1, term.degree)
    return ThurstonMatrix(tuple(classes), matrix, tuple(extra))
