"""
Finite bisets given by action tables.

Each generator acts as a permutation of the element list; ``left_table[k]``
is the permutation ``x -> g_k * x`` and ``right_table[k]`` is ``x -> x * g_k``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..algebra import INFINITE, FpGroup, Word
from .wreath import DecoratedPermutation, WreathBiset


def _power(perm: tuple[int, ...], exponent: int) -> tuple[int, ...]:
    if exponent < 0:
        inverse = [0] * len(perm)
        for i, j in enumerate(perm):
            inverse[j] = i
        perm, exponent = tuple(inverse), -exponent
    result = tuple(range(len(perm)))
    for _ in range(exponent):
        result = tuple(perm[i] for i in result)
    return result


def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    return _power(perm, -1)


@dataclass(frozen=True)
class TableBiset:
    """Biset on a finite set of named elements."""

    left_group: FpGroup
    right_group: FpGroup
    elements: tuple[str, ...]
    left_table: tuple[tuple[int, ...], ...] = ()
    right_table: tuple[tuple[int, ...], ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.left_table and self.left_group.rank:
            object.__setattr__(self, "left_table", self._identity_tables(self.left_group))
        if not self.right_table and self.right_group.rank:
            object.__setattr__(self, "right_table", self._identity_tables(self.right_group))
        if len(self.left_table) != self.left_group.rank:
            raise ValueError("Need one left table per left generator")
        if len(self.right_table) != self.right_group.rank:
            raise ValueError("Need one right table per right generator")
        for table in self.left_table + self.right_table:
            if sorted(table) != list(range(len(self.elements))):
                raise ValueError(f"Action table {table} is not a permutation of the elements")

    def _identity_tables(self, group: FpGroup) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(range(len(self.elements))) for _ in group.factors)

    @classmethod
    def trivial(cls, element: str, group: FpGroup | None = None, name: str = "") -> TableBiset:
        """One-element biset over trivial groups."""
        group = group or FpGroup.trivial()
        return cls(group, group, (element,), name=name)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, element: str) -> int:
        return self.elements.index(element)

    def left_act(self, word: Word, x: int) -> int:
        for index, exponent in reversed(word.syllables):
            x = _power(self.left_table[index], exponent)[x]
        return x

    def right_act(self, x: int, word: Word) -> int:
        for index, exponent in word.syllables:
            x = _power(self.right_table[index], exponent)[x]
        return x

    def violations(self) -> list[str]:
        problems = []
        for a, left in enumerate(self.left_table):
            for b, right in enumerate(self.right_table):
                for x in range(self.size):
                    if right[left[x]] != left[right[x]]:
                        problems.append(
                            f"left {self.left_group.generator_names[a]} and right "
                            f"{self.right_group.generator_names[b]} do not commute at "
                            f"{self.elements[x]}"
                        )
        sides = ((self.left_group, self.left_table), (self.right_group, self.right_table))
        for group, tables in sides:
            for factor, table in zip(group.factors, tables):
                if factor.order != INFINITE and _power(table, factor.order) != tuple(
                    range(self.size)
                ):
                    problems.append(f"{factor.name}^{factor.order} does not act trivially")
        return problems

    def left_orbits(self) -> list[list[int]]:
        """Left orbits, each listed in breadth-first order from its least element."""
        seen: set[int] = set()
        orbits = []
        for start in range(self.size):
            if start in seen:
                continue
            orbit = list(self._left_words_from(start))
            seen.update(orbit)
            orbits.append(orbit)
        return orbits

    def _left_words_from(self, start: int) -> dict[int, Word]:
        """Breadth-first words ``h`` with ``h * start`` reaching each point of the orbit."""
        words = {start: self.left_group.identity()}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for index, table in enumerate(self.left_table):
                for exponent in (1, -1):
                    y = _power(table, exponent)[x]
                    if y not in words:
                        words[y] = self.left_group.word([(index, exponent)]) * words[x]
                        queue.append(y)
        return words

    def is_left_free(self) -> bool:
        """True when the left action is free (stabilizers trivial)."""
        nontrivial = [f for f in self.left_group.factors if f.order != 1]
        if not nontrivial:
            return True
        if len(nontrivial) > 1 or nontrivial[0].order == INFINITE:
            return False
        index = self.left_group.factors.index(nontrivial[0])
        table = self.left_table[index]
        return all(
            _power(table, k)[x] != x
            for k in range(1, nontrivial[0].order)
            for x in range(self.size)
        )

    def to_wreath(self) -> WreathBiset:
        """Wreath presentation with the least element of each left orbit as basis."""
        if not self.is_left_free():
            raise ValueError(f"Table biset {self.name or self.elements} is not left-free")
        representatives = []
        locate: dict[int, tuple[Word, int]] = {}
        for orbit in self.left_orbits():
            basis_index = len(representatives)
            representatives.append(orbit[0])
            for y, word in self._left_words_from(orbit[0]).items():
                locate[y] = (word, basis_index)
        recursion = []
        for index in range(self.right_group.rank):
            decorations = []
            perm = []
            for rep in representatives:
                word, target = locate[self.right_table[index][rep]]
                decorations.append(word)
                perm.append(target)
            recursion.append(DecoratedPermutation(tuple(decorations), tuple(perm)))
        return WreathBiset(
            self.left_group,
            self.right_group,
            len(representatives),
            tuple(recursion),
            tuple(self.elements[r] for r in representatives),
            self.name,
        )

    def contragredient(self) -> TableBiset:
        """``g * x' * h = (h**-1 * x * g**-1)'`` on the same element names."""
        return TableBiset(
            self.right_group,
            self.left_group,
            self.elements,
            tuple(_inverse(t) for t in self.right_table),
            tuple(_inverse(t) for t in self.left_table),
            f"{self.name}^v" if self.name else "",
        )
