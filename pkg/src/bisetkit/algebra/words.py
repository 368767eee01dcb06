"""
Words in free products of cyclic groups.

Every group handled by bisetkit is a free product ``Z/n_1 * ... * Z/n_k`` of
cyclic factors, with ``n_i = 0`` standing for an infinite cyclic factor.
Elements are stored in syllable normal form: a tuple of ``(factor index,
exponent)`` pairs where

- adjacent syllables belong to different factors,
- no exponent is zero,
- exponents of a factor of finite order ``n`` lie in ``(-n/2, n/2]``.

The normal form is unique, so equality of elements is equality of syllable
tuples. All values are immutable.
"""

from __future__ import annotations

import string
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from math import gcd

INFINITE = 0

Syllable = tuple[int, int]


def reduce_exponent(exponent: int, order: int) -> int:
    """Reduce an exponent into the normal-form range of a factor of ``order``."""
    if order == INFINITE:
        return exponent
    residue = exponent % order
    if 2 * residue > order:
        residue -= order
    return residue


def format_order(order: int) -> str:
    return "inf" if order == INFINITE else str(order)


@dataclass(frozen=True)
class CyclicFactor:
    """A named cyclic free factor; ``order == 0`` means infinite."""

    name: str
    order: int = INFINITE

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("Cyclic factor needs a non-empty name")
        if self.order < 0:
            raise ValueError(f"Factor {self.name} has negative order {self.order}")

    @property
    def is_infinite(self) -> bool:
        return self.order == INFINITE


@dataclass(frozen=True)
class FpGroup:
    """Free product of cyclic factors, identified by factor names and orders."""

    factors: tuple[CyclicFactor, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        names = [factor.name for factor in self.factors]
        if len(set(names)) != len(names):
            raise ValueError(f"Factor names must be distinct, got {names}")

    @classmethod
    def free_product(
        cls, orders: Sequence[int], names: Sequence[str] | None = None, name: str = ""
    ) -> FpGroup:
        """Build ``Z/orders[0] * ...`` with default generator names ``a, b, c, ...``."""
        if names is None:
            names = default_generator_names(len(orders))
        if len(names) != len(orders):
            raise ValueError("Need one generator name per factor")
        return cls(tuple(CyclicFactor(n, o) for n, o in zip(names, orders)), name=name)

    @classmethod
    def trivial(cls, name: str = "") -> FpGroup:
        return cls((), name=name)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return tuple(factor.name for factor in self.factors)

    def is_trivial(self) -> bool:
        return all(factor.order == 1 for factor in self.factors)

    def index(self, name: str) -> int:
        for i, factor in enumerate(self.factors):
            if factor.name == name:
                return i
        raise ValueError(f"Unknown generator {name!r} in group {self}")

    def order_of(self, index: int) -> int:
        return self.factors[index].order

    def identity(self) -> Word:
        return Word(self, ())

    def generator(self, key: str | int) -> Word:
        index = self.index(key) if isinstance(key, str) else key
        return normalize([(index, 1)], self)

    def generators(self) -> list[Word]:
        return [self.generator(i) for i in range(self.rank)]

    def word(self, syllables: Iterable[Syllable]) -> Word:
        return normalize(syllables, self)

    def renamed(self, names: Sequence[str]) -> FpGroup:
        return FpGroup.free_product([f.order for f in self.factors], names, name=self.name)

    def __str__(self) -> str:
        inner = ", ".join(f"{f.name}:{format_order(f.order)}" for f in self.factors)
        return f"<{inner}>"


def default_generator_names(count: int) -> list[str]:
    letters = string.ascii_lowercase
    if count <= len(letters):
        return list(letters[:count])
    return [f"g{i + 1}" for i in range(count)]


@dataclass(frozen=True)
class Word:
    """Element of an ``FpGroup`` in syllable normal form.

    Build words with ``normalize`` or ``FpGroup.word``; the constructor does
    not normalize.
    """

    group: FpGroup
    syllables: tuple[Syllable, ...] = ()

    def __len__(self) -> int:
        return len(self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __pow__(self, exponent: int) -> Word:
        base = self if exponent >= 0 else invert(self)
        result = self.group.identity()
        for _ in range(abs(exponent)):
            result = multiply(result, base)
        return result

    def inverse(self) -> Word:
        return invert(self)

    def shortlex_key(self) -> tuple[int, tuple[tuple[int, int, bool], ...]]:
        return (len(self.syllables), tuple((i, abs(e), e < 0) for i, e in self.syllables))

    def max_exponent(self) -> int:
        return max((abs(e) for _, e in self.syllables), default=0)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for index, exponent in self.syllables:
            name = self.group.factors[index].name
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Word({self})"


def normalize(raw: Iterable[Syllable], group: FpGroup) -> Word:
    """Return the normal form of a raw syllable sequence.

    Raises:
        ValueError: if a factor index is not valid in ``group``.
    """
    stack: list[Syllable] = []
    rank = group.rank
    for index, exponent in raw:
        if not 0 <= index < rank:
            raise ValueError(f"Factor index {index} out of range for group {group}")
        if stack and stack[-1][0] == index:
            exponent += stack.pop()[1]
        exponent = reduce_exponent(exponent, group.factors[index].order)
        if exponent:
            stack.append((index, exponent))
    return Word(group, tuple(stack))


def _check_same_group(u: Word, v: Word) -> None:
    if u.group is not v.group and u.group != v.group:
        raise ValueError(f"Words live in different groups: {u.group} and {v.group}")


def multiply(u: Word, v: Word) -> Word:
    _check_same_group(u, v)
    if not u.syllables:
        return v
    if not v.syllables:
        return u
    return normalize(u.syllables + v.syllables, u.group)


def invert(u: Word) -> Word:
    orders = u.group.factors
    return Word(
        u.group,
        tuple((i, reduce_exponent(-e, orders[i].order)) for i, e in reversed(u.syllables)),
    )


def equal(u: Word, v: Word) -> bool:
    _check_same_group(u, v)
    return u.syllables == v.syllables


def product(words: Iterable[Word], group: FpGroup) -> Word:
    syllables: list[Syllable] = []
    for word in words:
        _check_same_group(word, group.identity())
        syllables.extend(word.syllables)
    return normalize(syllables, group)


def cyclic_reduction(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as ``conj * core * conj**-1`` with ``core`` cyclically reduced."""
    conj = w.group.identity()
    core = w
    while len(core) >= 2 and core.syllables[0][0] == core.syllables[-1][0]:
        first = Word(w.group, core.syllables[:1])
        core = multiply(multiply(invert(first), core), first)
        conj = multiply(conj, first)
    return conj, core


def word_order(w: Word) -> int:
    """Order of ``w``; ``INFINITE`` (0) for elements of infinite order."""
    _, core = cyclic_reduction(w)
    if not core.syllables:
        return 1
    if len(core) >= 2:
        return INFINITE
    index, exponent = core.syllables[0]
    order = w.group.factors[index].order
    if order == INFINITE:
        return INFINITE
    return order // gcd(order, exponent)


def is_power_of(w: Word, u: Word) -> int | None:
    """Return ``k`` with ``w == u**k``, or ``None``.

    For ``u`` of finite order the smallest non-negative ``k`` is returned.

    Raises:
        ValueError: if ``u`` is trivial.
    """
    _check_same_group(w, u)
    if u.is_identity():
        raise ValueError("is_power_of needs a nontrivial base word")
    if w.is_identity():
        return 0
    conj, core = cyclic_reduction(u)
    target = multiply(multiply(invert(conj), w), conj)
    if len(core) == 1:
        if len(target) != 1 or target.syllables[0][0] != core.syllables[0][0]:
            return None
        index, step = core.syllables[0]
        wanted = target.syllables[0][1]
        order = u.group.factors[index].order
        if order == INFINITE:
            return wanted // step if wanted % step == 0 else None
        for k in range(order):
            if reduce_exponent(k * step, order) == wanted:
                return k
        return None
    if len(target) % len(core):
        return None
    k = len(target) // len(core)
    if core**k == target:
        return k
    if core ** (-k) == target:
        return -k
    return None


def _syllable_choices(group: FpGroup, maxlen: int) -> list[list[Syllable]]:
    choices: list[list[Syllable]] = []
    for index, factor in enumerate(group.factors):
        if factor.order == INFINITE:
            bound = maxlen
            exponents = range(-bound, bound + 1)
        else:
            exponents = range(-(factor.order // 2), factor.order // 2 + 1)
        values = {reduce_exponent(e, factor.order) for e in exponents} - {0}
        choices.append([(index, e) for e in sorted(values, key=lambda e: (abs(e), e < 0))])
    return choices


def enumerate_words(group: FpGroup, maxlen: int) -> Iterator[Word]:
    """Yield every normal-form word of syllable length at most ``maxlen`` in shortlex order.

    Exponents of infinite factors are bounded by ``maxlen`` in absolute value.
    """
    if maxlen < 0:
        raise ValueError("maxlen must be non-negative")
    choices = _syllable_choices(group, maxlen)

    def extend(prefix: tuple[Syllable, ...], remaining: int) -> Iterator[tuple[Syllable, ...]]:
        if remaining == 0:
            yield prefix
            return
        for index in range(group.rank):
            if prefix and prefix[-1][0] == index:
                continue
            for syllable in choices[index]:
                yield from extend(prefix + (syllable,), remaining - 1)

    for length in range(maxlen + 1):
        for syllables in extend((), length):
            yield Word(group, syllables)


def coset_representative(g: Word, u: Word) -> tuple[Word, int]:
    """Shortlex-least element ``g * u**k`` of the coset ``g<u>`` and its ``k``."""
    _check_same_group(g, u)
    if u.is_identity():
        return g, 0
    order = word_order(u)
    if order != INFINITE:
        exponents: Iterable[int] = range(order)
    else:
        # Lengths of g*u**k grow linearly in |k| once k passes this window.
        bound = 2 * (len(g) + len(u)) + 2 + g.max_exponent() + u.max_exponent()
        exponents = sorted(range(-bound, bound + 1), key=lambda k: (abs(k), k < 0))
    best: tuple[Word, int] | None = None
    for k in exponents:
        candidate = multiply(g, u**k)
        if best is None or candidate.shortlex_key() < best[0].shortlex_key():
            best = (candidate, k)
    assert best is not None
    return best
