"""Graphs of bisets, left-fibrancy and fundamental bisets."""

from .fibrancy import (
    Decomposition,
    FibrancyCheck,
    FibrantTable,
    check_left_fibrant,
    is_left_fibrant,
)
from .fundamental import BasisEntry, FundamentalBiset, fundamental_biset
from .model import GobBuilder, GraphOfBisets
from .morphism import GogMorphism, gob_of_morphism, identity_gob
from .product import gob_product
from .subdivision import gob_barycentric
from .validation import validate_gob

__all__ = [
    "BasisEntry",
    "Decomposition",
    "FibrancyCheck",
    "FibrantTable",
    "FundamentalBiset",
    "GobBuilder",
    "GogMorphism",
    "GraphOfBisets",
    "check_left_fibrant",
    "fundamental_biset",
    "gob_barycentric",
    "gob_of_morphism",
    "gob_product",
    "identity_gob",
    "is_left_fibrant",
    "validate_gob",
]
