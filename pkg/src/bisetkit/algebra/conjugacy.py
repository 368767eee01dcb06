"""
Conjugacy classes in free products of cyclic groups.

Two elements of a free product are conjugate iff their cyclic reductions are
cyclic rotations of one another, so a class is represented by the least
rotation (shortlex on syllables) of a cyclically reduced word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, cyclic_reduction


@dataclass(frozen=True)
class ConjClass:
    """Conjugacy class, keyed by its canonical cyclically reduced representative."""

    representative: Word

    def is_trivial(self) -> bool:
        return self.representative.is_identity()

    def __str__(self) -> str:
        return f"[{self.representative}]"


def conj_canonical(w: Word) -> ConjClass:
    _, core = cyclic_reduction(w)
    syllables = core.syllables
    if len(syllables) <= 1:
        return ConjClass(core)
    rotations = (syllables[i:] + syllables[:i] for i in range(len(syllables)))
    best = min(rotations, key=lambda s: Word(core.group, s).shortlex_key())
    return ConjClass(Word(core.group, best))


def are_conjugate(u: Word, v: Word) -> bool:
    return conj_canonical(u) == conj_canonical(v)
