"""Deformations package - equisingular deformations via octic forms."""

from src.deformations.equisingular import (
    deformation_summary, equisingular_dimension, equisingular_subspace
)
from src.deformations.monomials import OCTIC_DIMENSION, OCTIC_MONOMIALS, octic_polynomial
from src.deformations.strata import (
    OcticSubspace, Stratum, StratumKind, jacobian_subspace, stratum_subspace, strata
)

__all__ = [
    'OCTIC_DIMENSION',
    'OCTIC_MONOMIALS',
    'OcticSubspace',
    'Stratum',
    'StratumKind',
    'deformation_summary',
    'equisingular_dimension',
    'equisingular_subspace',
    'jacobian_subspace',
    'octic_polynomial',
    'stratum_subspace',
    'strata',
]
