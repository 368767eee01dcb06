"""Level actions, approximate kernels, bounded equivalence and conjugacy classes."""

from .classes import conj_classes_bounded, conjugate
from .equivalence import equivalent_upto, permutation_isomorphic, quotient_order, verify_certificate
from .kernel import approx_kernel
from .levels import LevelAction, cycle_type, level_action, level_actions, require_self_biset

__all__ = [
    "LevelAction",
    "approx_kernel",
    "conj_classes_bounded",
    "conjugate",
    "cycle_type",
    "equivalent_upto",
    "level_action",
    "level_actions",
    "permutation_isomorphic",
    "quotient_order",
    "require_self_biset",
    "verify_certificate",
]
