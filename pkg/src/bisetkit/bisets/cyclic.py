"""
Cyclic bisets.

``CyclicBiset`` is the biset ``((1/d) Z) / n Z`` over a cyclic left group
``Z/n`` (``n`` may be infinite): the left generator acts by ``+1`` and the
right generator acts by ``+1/d``, or trivially when the biset is
right-trivial. These are the vertex and edge bisets of graphs of bisets
compiled from Hubbard trees; the regular cyclic biset of degree ``d`` is the
biset of ``z -> z**d``.

An element ``x = k + j/d`` with ``0 <= j < d`` is written ``t**k * s_j``, so
the basis is ``0, 1/d, ..., (d-1)/d``. In that basis the right generator of a
right-active biset is the odometer ``<1, ..., 1, t>(1 2 ... d)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from ..algebra import INFINITE, FpGroup, Word
from .wreath import DecoratedPermutation, WreathBiset


def cyclic_group(order: int, generator: str = "t", name: str = "") -> FpGroup:
    """``Z/order`` with one named generator; order 1 gives the trivial group."""
    if order == 1:
        return FpGroup.trivial(name=name)
    return FpGroup.free_product([order], [generator], name=name)


def group_order(group: FpGroup) -> int:
    """Order of a cyclic group (0 for infinite); rejects non-cyclic groups."""
    factors = [f for f in group.factors if f.order != 1]
    if not factors:
        return 1
    if len(factors) > 1:
        raise ValueError(f"Group {group} is not cyclic")
    return factors[0].order


@dataclass(frozen=True)
class CyclicBiset:
    """The biset ``((1/d) Z) / n Z`` with ``n = left_order``."""

    left_group: FpGroup
    right_group: FpGroup
    degree: int
    right_trivial: bool = False
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("Cyclic biset degree must be positive")
        group_order(self.left_group)
        group_order(self.right_group)

    @classmethod
    def regular(cls, degree: int, generator: str = "t") -> CyclicBiset:
        """The regular cyclic biset ``B(z**d)`` over ``Z``."""
        group = cyclic_group(INFINITE, generator)
        return cls(group, group, degree, name=f"z^{degree}")

    @property
    def left_order(self) -> int:
        return group_order(self.left_group)

    @property
    def right_order(self) -> int:
        return group_order(self.right_group)

    def violations(self) -> list[str]:
        """Conditions under which the right action is not well defined."""
        if self.right_trivial or self.right_order == 1:
            return []
        n, m = self.left_order, self.right_order
        # g**m must act trivially: m/d has to vanish modulo n.
        if m == INFINITE:
            return []
        if n == INFINITE or m % (n * self.degree):
            return [
                f"right generator of order {m} cannot act by +1/{self.degree} "
                f"on (1/{self.degree})Z/{'inf' if n == INFINITE else n}Z"
            ]
        return []

    def basis_labels(self) -> tuple[str, ...]:
        return tuple(str(Fraction(j, self.degree)) for j in range(self.degree))

    def locate(self, x: Fraction | int) -> tuple[Word, int]:
        """Write ``x`` as ``t**k * s_j``."""
        x = Fraction(x)
        scaled = x * self.degree
        if scaled.denominator != 1:
            raise ValueError(f"{x} is not on the 1/{self.degree} grid")
        k = floor(x)
        j = int(scaled) - k * self.degree
        return self._left_power(k), j

    def element(self, k: int, j: int) -> Fraction:
        value = k + Fraction(j, self.degree)
        n = self.left_order
        return value % n if n != INFINITE else value

    def _left_power(self, k: int) -> Word:
        if not self.left_group.factors:
            return self.left_group.identity()
        return self.left_group.word([(0, k)])

    def to_wreath(self) -> WreathBiset:
        identity = DecoratedPermutation.identity(self.left_group, self.degree)
        recursion: tuple[DecoratedPermutation, ...] = ()
        if self.right_group.factors:
            if self.right_trivial:
                entry = identity
            else:
                decorations = tuple(identity.decorations[:-1]) + (self._left_power(1),)
                shift = tuple((j + 1) % self.degree for j in range(self.degree))
                entry = DecoratedPermutation(decorations, shift)
            recursion = (entry,)
        return WreathBiset(
            self.left_group,
            self.right_group,
            self.degree,
            recursion,
            self.basis_labels(),
            self.name,
        )

    def __str__(self) -> str:
        n = "inf" if self.left_order == INFINITE else str(self.left_order)
        action = "trivial" if self.right_trivial else "active"
        return f"cyclic(n={n}, d={self.degree}, right={action})"


def tensor_cyclic(first: CyclicBiset, second: CyclicBiset) -> CyclicBiset:
    """Closed form of ``first (x) second`` when ``first`` is right-active.

    ``x (x) y`` is identified with ``x + y/d1``, so the basis pair ``(j1, j2)``
    becomes ``j1 * d2 + j2``, the row-major index of the wreath product.
    """
    if first.right_trivial:
        raise ValueError("Closed-form cyclic product needs a right-active first factor")
    if first.right_group != second.left_group:
        raise ValueError("Cyclic bisets do not share the middle group")
    return CyclicBiset(
        first.left_group,
        second.right_group,
        first.degree * second.degree,
        second.right_trivial,
    )
