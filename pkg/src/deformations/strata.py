"""Singular strata of an arrangement and their degree-8 ideal pieces.

A stratum of multiplicity m contributes the octics vanishing to order m along
its locus. Such an octic is cut out by the vanishing of all partial
derivatives of order m - 1 on the locus (lower orders follow by Euler's
relation). Along a line each of these derivatives restricts to a binary form
of degree 9 - m, so it is enough to impose them at 10 - m points of the line.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import factorial
from typing import List, Optional, Sequence, Tuple, Union

from sympy import Poly

from src.arrangement.forms import ProjLine, ProjPoint
from src.arrangement.incidence import IncidenceData
from src.deformations.monomials import (
    GENERATORS, OCTIC_DEGREE, OCTIC_DIMENSION, OCTIC_MONOMIALS, as_polynomial, coefficient_vector
)
from src.errors import OcticError
from src.exact.linalg import RationalMatrix, Subspace


class StratumKind(str, Enum):
    DOUBLE_LINE = "double-line"
    TRIPLE_LINE = "triple-line"
    POINT = "point"


@dataclass(frozen=True)
class Stratum:
    """A multiple line or point of the arrangement with its multiplicity."""

    kind: StratumKind
    locus: Union[ProjLine, ProjPoint]
    multiplicity: int

    def sort_key(self) -> Tuple:
        order = {StratumKind.DOUBLE_LINE: 0, StratumKind.TRIPLE_LINE: 1, StratumKind.POINT: 2}
        return order[self.kind], self.multiplicity, str(self.locus)


class OcticSubspace(Subspace):
    """A subspace of the 165-dimensional space of octic forms."""

    def __init__(self, spanning: Optional[RationalMatrix] = None,
                 conditions: Optional[RationalMatrix] = None):
        super().__init__(OCTIC_DIMENSION, spanning=spanning, conditions=conditions)

    @classmethod
    def wrap(cls, subspace: Subspace) -> "OcticSubspace":
        return cls(spanning=subspace._spanning, conditions=subspace._conditions)

    @classmethod
    def everything(cls) -> "OcticSubspace":
        return cls(conditions=RationalMatrix((), OCTIC_DIMENSION))

    def sum(self, other: Subspace) -> "OcticSubspace":
        return OcticSubspace.wrap(super().sum(other))

    def intersect(self, other: Subspace) -> "OcticSubspace":
        return OcticSubspace.wrap(super().intersect(other))


def jacobian_rows(f) -> List[Tuple[int, ...]]:
    """The 16 forms z_j * df/dz_i as coefficient vectors."""
    poly = as_polynomial(f)
    rows = []
    for var in GENERATORS:
        partial = poly.diff(var)
        for other in GENERATORS:
            rows.append(coefficient_vector(partial * Poly(other, *GENERATORS, domain=poly.domain)))
    return rows


def jacobian_subspace(f) -> OcticSubspace:
    """
    Degree-8 piece of the Jacobian ideal.

    Args:
        f: Arrangement or homogeneous octic polynomial

    Returns:
        OcticSubspace spanned by z_j * df/dz_i (dimension at most 16)
    """
    return OcticSubspace(spanning=RationalMatrix.from_rows(jacobian_rows(f), OCTIC_DIMENSION))


def _derivative_orders(order: int) -> List[Tuple[int, ...]]:
    return [a for a in product(range(order + 1), repeat=4) if sum(a) == order]


def derivative_conditions(point: Sequence[int], order: int) -> List[Tuple[int, ...]]:
    """
    Rows evaluating every partial derivative of the given order at a point.

    Row alpha has entry prod(beta_i! / (beta_i - alpha_i)! * Q_i^(beta_i - alpha_i))
    at the monomial x^beta, and 0 where some beta_i < alpha_i.
    """
    rows = []
    for alpha in _derivative_orders(order):
        row = []
        for beta in OCTIC_MONOMIALS:
            value = 1
            for a, b, q in zip(alpha, beta, point):
                if b < a:
                    value = 0
                    break
                value *= factorial(b) // factorial(b - a) * q ** (b - a)
            row.append(value)
        rows.append(tuple(row))
    return rows


def stratum_conditions(stratum: Stratum) -> RationalMatrix:
    """Linear conditions cutting out the octics of multiplicity >= m along the stratum."""
    m = stratum.multiplicity
    if m > OCTIC_DEGREE:
        raise OcticError(f"Multiplicity {m} exceeds the degree {OCTIC_DEGREE}")
    if m <= 0:
        return RationalMatrix((), OCTIC_DIMENSION)
    if isinstance(stratum.locus, ProjPoint):
        rows = derivative_conditions(stratum.locus.primitive(), m - 1)
    else:
        if stratum.locus.spanning is None:
            raise OcticError("Line strata need spanning points over Q")
        a, b = (p.primitive() for p in stratum.locus.spanning)
        rows = []
        for s in range(OCTIC_DEGREE + 2 - m):
            rows.extend(derivative_conditions([u + s * v for u, v in zip(a, b)], m - 1))
    return RationalMatrix.from_rows(rows, OCTIC_DIMENSION)


def stratum_subspace(stratum: Stratum) -> OcticSubspace:
    """
    Degree-8 piece of I_locus^m.

    Raises:
        OcticError: If m > 8
    """
    return OcticSubspace(conditions=stratum_conditions(stratum))


def strata(incidence: IncidenceData, min_point_multiplicity: int = 3) -> List[Stratum]:
    """
    Strata entering the equisingular ideal: every double and triple line and
    every point of multiplicity at least min_point_multiplicity.
    """
    found = [Stratum(StratumKind.DOUBLE_LINE, line, 2) for line in incidence.double_lines]
    found += [Stratum(StratumKind.TRIPLE_LINE, line, 3) for line in incidence.triple_lines]
    found += [
        Stratum(StratumKind.POINT, pt.point, pt.multiplicity)
        for pt in incidence.points
        if pt.multiplicity >= min_point_multiplicity
    ]
    return sorted(found, key=Stratum.sort_key)
