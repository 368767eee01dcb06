"""Biset representations, products, congruences and conjugacy-class lifting."""

from .congruence import Congruence
from .cyclic import CyclicBiset, cyclic_group, group_order, tensor_cyclic
from .lifting import LiftTerm, ThurstonMatrix, lift_conjugacy, thurston_endomorphism
from .products import Biset, as_wreath, change_basis, contragredient, tensor, tensor_wreath
from .table import TableBiset
from .wreath import DecoratedPermutation, WreathBiset, wreath_validate

__all__ = [
    "Biset",
    "Congruence",
    "CyclicBiset",
    "DecoratedPermutation",
    "LiftTerm",
    "TableBiset",
    "ThurstonMatrix",
    "WreathBiset",
    "as_wreath",
    "change_basis",
    "contragredient",
    "cyclic_group",
    "group_order",
    "lift_conjugacy",
    "tensor",
    "tensor_cyclic",
    "tensor_wreath",
    "thurston_endomorphism",
    "wreath_validate",
]
