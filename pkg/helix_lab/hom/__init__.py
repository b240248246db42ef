"""Homomorphism search and constructive transfers."""

from .solver import (
    count_homomorphisms,
    find_homomorphism,
    has_homomorphism,
    hom_equivalent,
    homomorphism,
    is_homomorphism,
    search_homomorphisms,
)
from .transfers import (
    block_markers,
    cycle_power_witness,
    decode_homb,
    encode_homb,
    odd_cycle_transfer_backward,
    odd_cycle_transfer_forward,
    power_coloring_parameters,
    power_lift_check,
    schrijver_power_coloring,
)

__all__ = [
    # Search
    "count_homomorphisms",
    "find_homomorphism",
    "has_homomorphism",
    "hom_equivalent",
    "homomorphism",
    "is_homomorphism",
    "search_homomorphisms",
    # Transfers
    "block_markers",
    "cycle_power_witness",
    "decode_homb",
    "encode_homb",
    "odd_cycle_transfer_backward",
    "odd_cycle_transfer_forward",
    "power_coloring_parameters",
    "power_lift_check",
    "schrijver_power_coloring",
]
