"""Arithmetic package - point counts over F_p and traces of Frobenius."""

from src.arithmetic.counting import (
    count_singular, fourfold_correction, fourfold_corrections, good_prime, line_corrections
)
from src.arithmetic.enumeration import enumerate_projective, point_count, projective_prefixes
from src.arithmetic.lseries import (
    a_p, count_record, frobenius_traces, lefschetz_count, lseries, weil_bound_holds
)

__all__ = [
    'a_p',
    'count_record',
    'count_singular',
    'enumerate_projective',
    'fourfold_correction',
    'fourfold_corrections',
    'frobenius_traces',
    'good_prime',
    'lefschetz_count',
    'line_corrections',
    'lseries',
    'point_count',
    'projective_prefixes',
    'weil_bound_holds',
]
