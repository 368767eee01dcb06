"""
Inline values: groups, words, decorated permutations and biset elements.

Syntax::

    group       <t:inf, a:2>   |   Z * Z/2   |   <>   |   NAME
    word        t*a^-1   |   1
    recursion   <1, t>(1 2)    (decorations in basis order, 1-based cycles)
    element     word|label     (``label`` names a basis element)

The parsers raise ``ValueError``; statement parsers attach positions.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Sequence
from fractions import Fraction

from ..algebra import INFINITE, FpGroup, Word
from ..algebra.words import default_generator_names, format_order
from ..bisets import DecoratedPermutation
from ..bisets.congruence import Element

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
SYLLABLE_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_']*)(?:\^(-?\d+))?")
RECURSION_RE = re.compile(r"<(?P<decorations>[^>]*)>\s*(?P<cycles>(?:\([^)]*\)\s*)*)")
CYCLE_RE = re.compile(r"\(([^)]*)\)")
CYCLIC_FACTOR_RE = re.compile(r"Z(?:/(\d+))?")


def parse_order(text: str) -> int:
    text = text.strip()
    if text in ("inf", "Z", "0"):
        return INFINITE
    order = int(text)
    if order < 1:
        raise ValueError(f"Order must be positive or inf, got {text}")
    return order


def parse_group(text: str, lookup: Callable[[str], FpGroup] | None = None) -> FpGroup:
    """Parse an inline group or resolve a group name through ``lookup``."""
    text = text.strip()
    if text in ("<>", "1"):
        return FpGroup.trivial()
    if text.startswith("<"):
        if not text.endswith(">"):
            raise ValueError(f"Unterminated group {text!r}")
        names, orders = [], []
        for chunk in text[1:-1].split(","):
            name, _, order = chunk.partition(":")
            name = name.strip()
            if not NAME_RE.fullmatch(name):
                raise ValueError(f"Bad generator name {name!r}")
            names.append(name)
            orders.append(parse_order(order) if order.strip() else INFINITE)
        return FpGroup.free_product(orders, names)
    factors = [chunk.strip() for chunk in text.split("*")]
    if all(CYCLIC_FACTOR_RE.fullmatch(f) for f in factors):
        orders = []
        for factor in factors:
            match = CYCLIC_FACTOR_RE.fullmatch(factor)
            assert match is not None
            orders.append(int(match.group(1)) if match.group(1) else INFINITE)
        return FpGroup.free_product(orders, default_generator_names(len(orders)))
    if lookup is not None and NAME_RE.fullmatch(text):
        return lookup(text)
    raise ValueError(f"Cannot read group {text!r}")


def format_group(group: FpGroup) -> str:
    inner = ", ".join(f"{f.name}:{format_order(f.order)}" for f in group.factors)
    return f"<{inner}>"


def parse_word(text: str, group: FpGroup) -> Word:
    """Parse ``t*a^-1`` (or ``1``) in ``group``."""
    text = text.strip()
    if text in ("1", ""):
        return group.identity()
    syllables = []
    for chunk in text.split("*"):
        match = SYLLABLE_RE.fullmatch(chunk.strip())
        if match is None:
            raise ValueError(f"Bad syllable {chunk.strip()!r} in word {text!r}")
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        syllables.append((group.index(match.group(1)), exponent))
    return group.word(syllables)


def parse_recursion(text: str, group: FpGroup, degree: int | None = None) -> DecoratedPermutation:
    """Parse ``<h_1, ..., h_d>(cycles)`` with words in ``group``."""
    match = RECURSION_RE.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"Expected <decorations>(cycles), got {text.strip()!r}")
    raw = match.group("decorations").strip()
    decorations = [parse_word(chunk, group) for chunk in raw.split(",")] if raw else []
    if degree is not None and len(decorations) != degree:
        raise ValueError(f"Expected {degree} decorations, got {len(decorations)}")
    cycles = []
    for cycle in CYCLE_RE.findall(match.group("cycles")):
        points = [int(p) - 1 for p in cycle.split()]
        if any(p < 0 or p >= len(decorations) for p in points):
            raise ValueError(f"Cycle ({cycle}) leaves the basis 1..{len(decorations)}")
        if len(points) > 1:
            cycles.append(points)
    return DecoratedPermutation.from_cycles(decorations, cycles)


def parse_element(text: str, group: FpGroup, basis: Sequence[str]) -> Element:
    word, sep, label = text.strip().rpartition("|")
    if not sep:
        raise ValueError(f"Element {text.strip()!r} must look like word|label")
    label = label.strip()
    if label not in basis:
        raise ValueError(f"Unknown basis label {label!r}; basis is {', '.join(basis)}")
    return parse_word(word, group), list(basis).index(label)


def parse_elements(text: str, group: FpGroup, basis: Sequence[str]) -> tuple[Element, ...]:
    return tuple(parse_element(chunk, group, basis) for chunk in text.split(",") if chunk.strip())


def format_elements(elements: Sequence[Element], basis: Sequence[str]) -> str:
    return ", ".join(f"{word}|{basis[j]}" for word, j in elements)


def parse_angle(text: str) -> Fraction:
    return Fraction(text.strip())
