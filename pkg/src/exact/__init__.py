"""Exact arithmetic substrate: rationals, prime fields, linear algebra, series."""

from src.exact.fields import FpElem, is_prime, legendre, legendre_table, prime_range
from src.exact.linalg import (
    RationalMatrix, Subspace, fraction_free_rank, rref, subspace_intersect, subspace_sum
)
from src.exact.rational import format_rational, parse_rational
from src.exact.series import IntSeries, euler_product, series_mul

__all__ = [
    'FpElem',
    'IntSeries',
    'RationalMatrix',
    'Subspace',
    'euler_product',
    'format_rational',
    'fraction_free_rank',
    'is_prime',
    'legendre',
    'legendre_table',
    'parse_rational',
    'prime_range',
    'rref',
    'series_mul',
    'subspace_intersect',
    'subspace_sum',
]
