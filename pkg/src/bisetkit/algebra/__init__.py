"""Exact word arithmetic in free products of cyclic groups."""

from .conjugacy import ConjClass, are_conjugate, conj_canonical
from .homomorphisms import Homomorphism
from .words import (
    INFINITE,
    CyclicFactor,
    FpGroup,
    Word,
    coset_representative,
    cyclic_reduction,
    enumerate_words,
    equal,
    invert,
    is_power_of,
    multiply,
    normalize,
    product,
    reduce_exponent,
    word_order,
)

__all__ = [
    "INFINITE",
    "ConjClass",
    "CyclicFactor",
    "FpGroup",
    "Homomorphism",
    "Word",
    "are_conjugate",
    "conj_canonical",
    "coset_representative",
    "cyclic_reduction",
    "enumerate_words",
    "equal",
    "invert",
    "is_power_of",
    "multiply",
    "normalize",
    "product",
    "reduce_exponent",
    "word_order",
]
