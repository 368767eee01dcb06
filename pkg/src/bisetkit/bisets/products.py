"""
Products, contragredients and basis changes of bisets.
"""

from __future__ import annotations

from typing import Union

from ..errors import StructureError
from ..logging import logger
from .cyclic import CyclicBiset, tensor_cyclic
from .table import TableBiset
from .wreath import DecoratedPermutation, WreathBiset

Biset = Union[WreathBiset, CyclicBiset, TableBiset]


def as_wreath(biset: Biset) -> WreathBiset:
    """Wreath presentation of any supported biset."""
    if isinstance(biset, WreathBiset):
        return biset
    return biset.to_wreath()


def tensor_wreath(first: WreathBiset, second: WreathBiset) -> WreathBiset:
    """``first (x)_G second`` with basis pairs ``(s, t)`` at index ``s * d2 + t``.

    A generator f of the right group acts on ``t`` through ``second``,
    producing ``t * f = g * t'``; the decoration ``g`` is then pushed through
    ``first``: ``s * g = h * s'``.
    """
    if first.right_group != second.left_group:
        raise StructureError(
            f"Cannot tensor: right group {first.right_group} of the first biset differs "
            f"from left group {second.left_group} of the second"
        )
    d1, d2 = first.degree, second.degree
    recursion = []
    for entry in second.recursion:
        images = {}
        decorations = []
        perm = []
        for s in range(d1):
            for t in range(d2):
                g = entry.decorations[t]
                if g not in images:
                    images[g] = first.image(g)
                pushed = images[g]
                decorations.append(pushed.decorations[s])
                perm.append(pushed.perm[s] * d2 + entry.perm[t])
        recursion.append(DecoratedPermutation(tuple(decorations), tuple(perm)))
    basis = tuple(f"{a}.{b}" for a in first.basis for b in second.basis)
    return WreathBiset(first.left_group, second.right_group, d1 * d2, tuple(recursion), basis)


def tensor(first: Biset, second: Biset) -> Biset:
    """Product of two bisets; cyclic pairs with a right-active first factor stay cyclic."""
    if (
        isinstance(first, CyclicBiset)
        and isinstance(second, CyclicBiset)
        and not first.right_trivial
    ):
        if first.right_group != second.left_group:
            raise StructureError("Cyclic bisets do not share the middle group")
        return tensor_cyclic(first, second)
    return tensor_wreath(as_wreath(first), as_wreath(second))


def contragredient(biset: Biset) -> Biset:
    """Dual biset with sides swapped: ``g * b' * h = (h**-1 * b * g**-1)'``.

    Supported for table bisets and for degree-1 bisets whose homomorphism can
    be inverted; other left-free bisets have no left-free dual.

    Raises:
        StructureError: if the dual is not representable.
    """
    if isinstance(biset, TableBiset):
        return biset.contragredient()
    wreath = as_wreath(biset)
    if wreath.degree != 1:
        raise StructureError(
            f"Contragredient of a degree-{wreath.degree} left-free biset is not left-free"
        )
    phi = wreath.homomorphism()
    inverse = phi.invert()
    if inverse is None:
        raise StructureError(f"Homomorphism {phi} is not invertible within the search bound")
    logger.debug(f"contragredient: inverted {phi} to {inverse}")
    name = f"{wreath.name}^v" if wreath.name else ""
    return WreathBiset.from_homomorphism(inverse, name=name)


def change_basis(biset: WreathBiset, w: DecoratedPermutation) -> WreathBiset:
    """Rewrite the recursion as ``g -> w**-1 * Φ(g) * w``."""
    if w.degree != biset.degree:
        raise StructureError(f"Basis change of degree {w.degree} on a degree-{biset.degree} biset")
    if w.group != biset.left_group:
        raise StructureError("Basis change decorations must lie in the left group")
    inverse = w.inverse()
    recursion = tuple(inverse * entry * w for entry in biset.recursion)
    return WreathBiset(
        biset.left_group, biset.right_group, biset.degree, recursion, name=biset.name
    )
