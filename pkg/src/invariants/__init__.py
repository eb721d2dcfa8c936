"""Invariants package - Euler characteristic, Picard rank and Hodge numbers."""

from src.invariants.formulas import euler, h2_omega1_Y, picard_rank_Y
from src.invariants.hodge import (
    betti_numbers, blown_up_genus_sum, compute_invariants, hodge, hodge_diamond
)

__all__ = [
    'betti_numbers',
    'blown_up_genus_sum',
    'compute_invariants',
    'euler',
    'h2_omega1_Y',
    'hodge',
    'hodge_diamond',
    'picard_rank_Y',
]
