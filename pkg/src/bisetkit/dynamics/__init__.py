"""Hubbard trees, their graphs of cyclic bisets, matings, tunings and reference systems."""

from .compile import hubbard_graph_of_groups, hubbard_to_gob
from .fixtures import (
    basilica_hubbard,
    basilica_lamination,
    power_map,
    z2_plus_i_hubbard,
)
from .hubbard import (
    HubbardBundle,
    HubbardTree,
    boundary_offsets,
    derive_ord,
    normalize_angle,
    validate_bundle,
)
from .surgery import (
    Peripheral,
    TuningSlot,
    identity_slots,
    mating,
    peripheral_congruence,
    tuning,
)

__all__ = [
    "HubbardBundle",
    "HubbardTree",
    "Peripheral",
    "TuningSlot",
    "basilica_hubbard",
    "basilica_lamination",
    "boundary_offsets",
    "derive_ord",
    "hubbard_graph_of_groups",
    "hubbard_to_gob",
    "identity_slots",
    "mating",
    "normalize_angle",
    "peripheral_congruence",
    "power_map",
    "tuning",
    "validate_bundle",
    "z2_plus_i_hubbard",
]
