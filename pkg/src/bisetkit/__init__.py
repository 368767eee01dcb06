"""
Public API for the bisetkit package.
"""

from .algebra import INFINITE, ConjClass, FpGroup, Homomorphism, Word, conj_canonical
from .analysis import equivalent_upto, level_action, level_actions, verify_certificate
from .bisets import (
    CyclicBiset,
    DecoratedPermutation,
    TableBiset,
    WreathBiset,
    as_wreath,
    contragredient,
    lift_conjugacy,
    tensor,
    thurston_endomorphism,
)
from .config import Budget
from .dynamics import HubbardBundle, HubbardTree, hubbard_to_gob, mating, tuning
from .errors import BisetkitError, BudgetExceededError, ParseError, StructureError
from .formats import read_document
from .gob import GobBuilder, GraphOfBisets, fundamental_biset, validate_gob
from .graphs import EdgeSpec, Graph, GraphOfGroups, pi1_presentation
from .models import EquivalenceVerdict, ValidationReport
from .workspace import Workspace

__all__ = [
    "INFINITE",
    "BisetkitError",
    "Budget",
    "BudgetExceededError",
    "ConjClass",
    "CyclicBiset",
    "DecoratedPermutation",
    "EdgeSpec",
    "EquivalenceVerdict",
    "FpGroup",
    "GobBuilder",
    "Graph",
    "GraphOfBisets",
    "GraphOfGroups",
    "Homomorphism",
    "HubbardBundle",
    "HubbardTree",
    "ParseError",
    "StructureError",
    "TableBiset",
    "ValidationReport",
    "Word",
    "WreathBiset",
    "Workspace",
    "as_wreath",
    "conj_canonical",
    "contragredient",
    "equivalent_upto",
    "fundamental_biset",
    "hubbard_to_gob",
    "level_action",
    "level_actions",
    "lift_conjugacy",
    "mating",
    "pi1_presentation",
    "read_document",
    "tensor",
    "thurston_endomorphism",
    "tuning",
    "validate_gob",
    "verify_certificate",
]
