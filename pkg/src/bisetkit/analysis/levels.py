"""
Level actions of self-bisets on the tree of tensor powers.

A left-free G-G-biset of degree ``d`` acts on the words ``x_1 x_2 ... x_n``
over its basis: ``s_{x_1} * g = h * s_{x_1'}`` and the tail is acted on by
``h``. Level ``n`` has ``d**n`` points, the word ``x_1 ... x_n`` being the
point ``x_1 * d**(n-1) + ... + x_n`` (lexicographic order on basis
indices), so dropping the last letter is ``point // d``.

Permutations are numpy arrays ``perm[x] = x * g``; the right action makes
``x * (g h)`` the array ``perm_h[perm_g]``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from networkx.utils import UnionFind

from ..algebra import Word
from ..bisets import WreathBiset
from ..config import Budget
from ..errors import StructureError
from ..logging import logger
from ..models.analysis import LevelSummary


def compose(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Act by ``first`` and then by ``second``."""
    return second[first]


def invert(perm: np.ndarray) -> np.ndarray:
    return np.argsort(perm)


def cycle_type(perm: np.ndarray) -> tuple[int, ...]:
    """Cycle lengths, fixed points included, in decreasing order."""
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = int(perm[point])
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@dataclass
class LevelAction:
    """Generator permutations of ``biset`` on the ``degree**level`` points of one level."""

    biset: WreathBiset
    level: int
    perms: tuple[np.ndarray, ...]
    _words: dict[Word, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def points(self) -> int:
        return self.biset.degree**self.level

    @property
    def generators(self) -> tuple[str, ...]:
        return self.biset.right_group.generator_names

    def permutation(self, key: str | int) -> np.ndarray:
        index = key if isinstance(key, int) else self.biset.right_group.index(key)
        return self.perms[index]

    def word_permutation(self, word: Word) -> np.ndarray:
        """Permutation of an arbitrary word of the acting group."""
        cached = self._words.get(word)
        if cached is not None:
            return cached
        result = np.arange(self.points)
        for index, exponent in word.syllables:
            step = self.perms[index] if exponent > 0 else invert(self.perms[index])
            for _ in range(abs(exponent)):
                result = compose(result, step)
        self._words[word] = result
        return result

    def cycle_type(self, word: Word) -> tuple[int, ...]:
        return cycle_type(self.word_permutation(word))

    def orbits(self) -> list[list[int]]:
        """Orbits of the whole group, each sorted, ordered by least point."""
        forest = UnionFind(range(self.points))
        for perm in self.perms:
            for x, y in enumerate(perm.tolist()):
                forest.union(x, y)
        return sorted(sorted(orbit) for orbit in forest.to_sets())

    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(o) for o in self.orbits()), reverse=True))

    def is_trivial(self, word: Word) -> bool:
        perm = self.word_permutation(word)
        return bool(np.array_equal(perm, np.arange(self.points)))

    def projects_to(self, lower: LevelAction) -> bool:
        """Whether dropping the last letter carries this action onto ``lower``."""
        d = self.biset.degree
        points = np.arange(self.points)
        return all(
            np.array_equal(upper // d, below[points // d])
            for upper, below in zip(self.perms, lower.perms)
        )

    def cycle_types(self) -> dict[str, list[int]]:
        return {
            name: list(cycle_type(perm)) for name, perm in zip(self.generators, self.perms)
        }

    def summary(self) -> LevelSummary:
        return LevelSummary(
            biset=self.biset.name,
            degree=self.biset.degree,
            level=self.level,
            points=self.points,
            cycle_types=self.cycle_types(),
            orbit_sizes=list(self.orbit_sizes()),
        )


def require_self_biset(biset: WreathBiset) -> None:
    if biset.left_group != biset.right_group:
        raise StructureError(
            f"{biset.name or 'biset'} is a {biset.left_group}-{biset.right_group} biset, "
            "level actions need a self-biset"
        )


def _next_level(biset: WreathBiset, lower: LevelAction, index: int) -> np.ndarray:
    entry = biset.recursion[index]
    block = lower.points
    perm = np.empty(biset.degree * block, dtype=np.int64)
    for x, (decoration, target) in enumerate(zip(entry.decorations, entry.perm)):
        perm[x * block : (x + 1) * block] = target * block + lower.word_permutation(decoration)
    return perm


def level_actions(
    biset: WreathBiset, depth: int, budget: Budget | None = None, jobs: int = 1
) -> list[LevelAction]:
    """Actions at levels ``0, 1, ..., depth``, built from the bottom up.

    Raises:
        StructureError: if ``biset`` is not a self-biset.
        BudgetExceededError: if ``depth`` or ``degree**depth`` exceeds the budget.
    """
    if depth < 0:
        raise ValueError("Level must be non-negative")
    require_self_biset(biset)
    budget = budget or Budget()
    budget.check_depth(depth)
    budget.check_points(biset.degree**depth)

    rank = biset.right_group.rank
    levels = [LevelAction(biset, 0, tuple(np.zeros(1, dtype=np.int64) for _ in range(rank)))]
    for level in range(1, depth + 1):
        lower = levels[-1]
        if jobs > 1 and rank > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                perms = list(pool.map(lambda i: _next_level(biset, lower, i), range(rank)))
        else:
            perms = [_next_level(biset, lower, i) for i in range(rank)]
        levels.append(LevelAction(biset, level, tuple(perms)))
        logger.debug(
            f"level_actions: {biset.name or 'biset'} level {level}, "
            f"{lower.points * biset.degree} points"
        )
    return levels


def level_action(
    biset: WreathBiset, level: int, budget: Budget | None = None, jobs: int = 1
) -> LevelAction:
    """Generator permutations at one level."""
    return level_actions(biset, level, budget, jobs)[-1]
