"""
Conjugacy classes of biset elements in a bounded ball.

For a G-G-biset the classes are ``B / (b ~ g * b * g**-1)``; their number
bounds the Nielsen number of the map. Elements ``h * s_i`` with ``|h| <= L``
are merged with their conjugates by words of length at most ``L`` whenever
the conjugate stays in the ball.
"""

from __future__ import annotations

from networkx.utils import UnionFind

from ..algebra import Word, enumerate_words
from ..bisets import WreathBiset
from ..bisets.congruence import Element
from ..config import Budget
from ..logging import logger
from ..models.analysis import ConjugacyClasses
from .levels import require_self_biset


def _order(element: Element) -> tuple:
    return element[0].shortlex_key(), element[1]


def _label(biset: WreathBiset, element: Element) -> str:
    word, index = element
    basis = biset.basis[index]
    return basis if word.is_identity() else f"{word}*{basis}"


def conjugate(biset: WreathBiset, g: Word, element: Element) -> Element:
    """``g * (h * s_i) * g**-1``."""
    word, index = element
    decoration, target = biset.act(index, g.inverse())
    return g * word * decoration, target


def conj_classes_bounded(
    biset: WreathBiset, radius: int, budget: Budget | None = None
) -> ConjugacyClasses:
    """Partition the ball of radius ``radius`` into bounded conjugacy classes.

    Raises:
        StructureError: if ``biset`` is not a self-biset.
        BudgetExceededError: if the ball exceeds ``max_elements``.
    """
    require_self_biset(biset)
    budget = budget or Budget()
    budget.check_word_length(radius)
    words = list(enumerate_words(biset.left_group, radius))
    budget.check_elements(len(words) * biset.degree)
    ball = [(word, i) for word in words for i in range(biset.degree)]
    members = set(ball)
    forest = UnionFind(ball)
    conjugators = [g for g in enumerate_words(biset.right_group, radius) if not g.is_identity()]
    for element in ball:
        for g in conjugators:
            image = conjugate(biset, g, element)
            if image in members:
                forest.union(element, image)

    classes = sorted((sorted(c, key=_order) for c in forest.to_sets()), key=lambda c: _order(c[0]))
    logger.debug(
        f"conj_classes_bounded: {len(classes)} classes among {len(ball)} elements "
        f"of {biset.name or 'biset'}"
    )
    return ConjugacyClasses(
        biset=biset.name,
        radius=radius,
        elements=len(ball),
        representatives=[_label(biset, c[0]) for c in classes],
        sizes=[len(c) for c in classes],
    )
