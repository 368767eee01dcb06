"""
Bounded combinatorial-equivalence testing of self-bisets.

Two self-bisets are combinatorially equivalent when they become conjugate
after dividing out the kernels of their actions on their trees. This module
is a semi-decision procedure: it compares invariants of the level actions
up to a depth and searches generator correspondences up to a word length.

A ``distinguished`` verdict is sound and carries a re-checkable
certificate; only invariants of the level actions (degree, orbit sizes,
quotient orders) produce one. A ``consistent`` verdict only says that, up
to the bounds, there are generator images in both directions whose actions
are permutation-isomorphic at every compared level. When no such images
exist within the word length the verdict is ``inconclusive``.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from ..algebra import Word, enumerate_words, word_order
from ..bisets import WreathBiset
from ..config import Budget
from ..errors import BudgetExceededError
from ..logging import logger
from ..models.analysis import (
    Certificate,
    CertificateKind,
    EquivalenceVerdict,
    SearchReport,
    VerdictOutcome,
)
from .levels import LevelAction, level_actions


def quotient_order(action: LevelAction) -> int:
    """Order of the permutation group generated at this level."""
    perms = [Permutation(perm.tolist()) for perm in action.perms]
    if not perms:
        perms = [Permutation(list(range(action.points)))]
    return int(PermutationGroup(perms).order())


def _orbits(perms: Sequence[np.ndarray], points: int) -> list[list[int]]:
    label = np.full(points, -1, dtype=np.int64)
    orbits = []
    for start in range(points):
        if label[start] >= 0:
            continue
        label[start] = len(orbits)
        orbit = [start]
        for x in orbit:
            for perm in perms:
                y = int(perm[x])
                if label[y] < 0:
                    label[y] = len(orbits)
                    orbit.append(y)
        orbits.append(orbit)
    return orbits


def _extend(
    source: Sequence[np.ndarray], target: Sequence[np.ndarray], a: int, b: int
) -> dict[int, int] | None:
    """The intertwining bijection of two transitive actions with ``a -> b``, if any."""
    forward = {a: b}
    used = {b}
    queue = [a]
    for x in queue:
        for s, t in zip(source, target):
            y, image = int(s[x]), int(t[forward[x]])
            known = forward.get(y)
            if known is None:
                if image in used:
                    return None
                forward[y] = image
                used.add(image)
                queue.append(y)
            elif known != image:
                return None
    return forward


def permutation_isomorphic(source: Sequence[np.ndarray], target: Sequence[np.ndarray]) -> bool:
    """Whether a bijection of points carries every ``source[j]`` to ``target[j]``.

    Orbits are matched greedily: isomorphism of transitive actions is an
    equivalence relation, so any isomorphic partner of an orbit will do.
    """
    points = len(source[0]) if source else 0
    if not source:
        return True
    left = _orbits(source, points)
    right = _orbits(target, points)
    free = list(range(len(right)))
    for orbit in left:
        for k in list(free):
            candidate = right[k]
            if len(candidate) != len(orbit):
                continue
            if any(_extend(source, target, orbit[0], b) is not None for b in candidate):
                free.remove(k)
                break
        else:
            return False
    return True


class _Search:
    """Generator images from ``source`` into ``target`` with isomorphic level actions."""

    def __init__(
        self,
        source: list[LevelAction],
        target: list[LevelAction],
        word_length: int,
        budget: Budget,
    ) -> None:
        self.source = source
        self.target = target
        self.word_length = word_length
        self.budget = budget
        self.tried = 0
        self.candidates: list[list[Word]] = []

    def _prune(self) -> None:
        source_group = self.source[0].biset.right_group
        target_group = self.target[0].biset.right_group
        words = list(enumerate_words(target_group, self.word_length))
        if len(words) > self.budget.max_elements:
            raise BudgetExceededError("max_elements", self.budget.max_elements, len(words))
        depth = len(self.source) - 1
        for g in source_group.generators():
            order = word_order(g)
            types = [self.source[k].cycle_type(g) for k in range(1, depth + 1)]
            kept = [
                w
                for w in words
                if word_order(w) == order
                and all(self.target[k].cycle_type(w) == types[k - 1] for k in range(1, depth + 1))
            ]
            self.candidates.append(kept)
        logger.debug(
            f"equivalence search: candidates per generator {[len(c) for c in self.candidates]}"
        )

    def run(self) -> tuple[Word, ...] | None:
        self._prune()
        for images in itertools.product(*self.candidates):
            self.tried += 1
            self.budget.check_matchings(self.tried)
            if all(
                permutation_isomorphic(
                    self.source[k].perms,
                    [self.target[k].word_permutation(w) for w in images],
                )
                for k in range(1, len(self.source))
            ):
                return images
        return None


def _search(
    source: list[LevelAction], target: list[LevelAction], word_length: int, budget: Budget
) -> tuple[_Search, tuple[Word, ...] | None]:
    search = _Search(source, target, word_length, budget)
    return search, search.run()


def _invariant_certificate(
    first: list[LevelAction], second: list[LevelAction], budget: Budget
) -> Certificate | None:
    for k in range(1, len(first)):
        left, right = first[k].orbit_sizes(), second[k].orbit_sizes()
        if left != right:
            return Certificate(
                kind=CertificateKind.ORBIT_SIZES,
                level=k,
                left=_fmt(left),
                right=_fmt(right),
            )
        if first[k].points <= budget.max_order_points:
            left_order, right_order = quotient_order(first[k]), quotient_order(second[k])
            if left_order != right_order:
                return Certificate(
                    kind=CertificateKind.QUOTIENT_ORDER,
                    level=k,
                    left=str(left_order),
                    right=str(right_order),
                )
    return None


def _fmt(sizes: Sequence[int]) -> str:
    return ",".join(str(s) for s in sizes)


def _images(group_generators: Sequence[str], images: Sequence[Word]) -> dict[str, str]:
    return {name: str(w) for name, w in zip(group_generators, images)}


def equivalent_upto(
    first: WreathBiset,
    second: WreathBiset,
    depth: int,
    word_length: int,
    budget: Budget | None = None,
) -> EquivalenceVerdict:
    """Compare two self-bisets up to tree level ``depth`` and image length ``word_length``.

    Raises:
        StructureError: if either biset is not a self-biset.
        BudgetExceededError: if a level, the candidate words or the matching
            search exceeds the budget.
    """
    budget = budget or Budget()
    budget.check_word_length(word_length)

    def distinguished(certificate: Certificate) -> EquivalenceVerdict:
        verdict = EquivalenceVerdict(
            outcome=VerdictOutcome.DISTINGUISHED,
            depth=depth,
            word_length=word_length,
            certificate=certificate,
        )
        logger.info(f"equivalent_upto: {verdict.summary()}")
        return verdict

    if first.degree != second.degree:
        return distinguished(
            Certificate(
                kind=CertificateKind.DEGREE,
                level=0,
                left=str(first.degree),
                right=str(second.degree),
            )
        )
    first_levels = level_actions(first, depth, budget)
    second_levels = level_actions(second, depth, budget)
    certificate = _invariant_certificate(first_levels, second_levels, budget)
    if certificate is not None:
        return distinguished(certificate)

    forward_search, forward = _search(first_levels, second_levels, word_length, budget)
    backward_search, backward = _search(second_levels, first_levels, word_length, budget)
    if forward is None or backward is None:
        candidates = {
            f"forward:{name}": len(c)
            for name, c in zip(first.right_group.generator_names, forward_search.candidates)
        }
        candidates.update(
            {
                f"backward:{name}": len(c)
                for name, c in zip(second.right_group.generator_names, backward_search.candidates)
            }
        )
        verdict = EquivalenceVerdict(
            outcome=VerdictOutcome.INCONCLUSIVE,
            depth=depth,
            word_length=word_length,
            search=SearchReport(
                word_length=word_length,
                forward_found=forward is not None,
                backward_found=backward is not None,
                candidates=candidates,
                matchings_tried=forward_search.tried + backward_search.tried,
            ),
        )
        logger.info(f"equivalent_upto: {verdict.summary()}")
        return verdict
    verdict = EquivalenceVerdict(
        outcome=VerdictOutcome.CONSISTENT,
        depth=depth,
        word_length=word_length,
        forward=_images(first.right_group.generator_names, forward),
        backward=_images(second.right_group.generator_names, backward),
    )
    logger.info(f"equivalent_upto: {verdict.summary()}")
    return verdict


def verify_certificate(
    first: WreathBiset,
    second: WreathBiset,
    certificate: Certificate,
    budget: Budget | None = None,
) -> bool:
    """Recompute the invariant named by ``certificate`` and confirm the recorded difference."""
    budget = budget or Budget()
    recorded = (certificate.left, certificate.right)
    if certificate.kind is CertificateKind.DEGREE:
        values = (str(first.degree), str(second.degree))
        return values == recorded and values[0] != values[1]
    first_levels = level_actions(first, certificate.level, budget)
    second_levels = level_actions(second, certificate.level, budget)
    top_first, top_second = first_levels[-1], second_levels[-1]
    if certificate.kind is CertificateKind.ORBIT_SIZES:
        values = (_fmt(top_first.orbit_sizes()), _fmt(top_second.orbit_sizes()))
        return values == recorded and values[0] != values[1]
    values = (str(quotient_order(top_first)), str(quotient_order(top_second)))
    return values == recorded and values[0] != values[1]
