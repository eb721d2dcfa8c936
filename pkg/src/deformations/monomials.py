"""Degree-8 monomials in x, y, z, t and coefficient vectors of octic forms."""
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple, Union

from sympy import Poly, ZZ, symbols

from src.arrangement.forms import VARIABLES, Arrangement, LinearForm
from src.errors import DegreeError

OCTIC_DEGREE = 8
GENERATORS = symbols(" ".join(VARIABLES))

Exponent = Tuple[int, int, int, int]


@lru_cache(maxsize=None)
def monomials(degree: int) -> Tuple[Exponent, ...]:
    """Exponent vectors of the given degree in graded lexicographic order, x > y > z > t."""
    exponents = [e for e in product(range(degree + 1), repeat=4) if sum(e) == degree]
    return tuple(sorted(exponents, reverse=True))


OCTIC_MONOMIALS = monomials(OCTIC_DEGREE)
OCTIC_DIMENSION = len(OCTIC_MONOMIALS)
MONOMIAL_INDEX: Dict[Exponent, int] = {e: i for i, e in enumerate(OCTIC_MONOMIALS)}


def monomial_name(exponent: Exponent) -> str:
    parts = []
    for var, power in zip(VARIABLES, exponent):
        if power:
            parts.append(var if power == 1 else f"{var}^{power}")
    return "*".join(parts) or "1"


def linear_polynomial(form: LinearForm) -> Poly:
    expr = sum(c * g for c, g in zip(form.coefficients, GENERATORS))
    return Poly(expr, *GENERATORS, domain=ZZ)


def octic_polynomial(arrangement: Arrangement) -> Poly:
    """scale * product of the arrangement's forms as a sympy polynomial."""
    poly = Poly(arrangement.scale, *GENERATORS, domain=ZZ)
    for form in arrangement.forms:
        poly = poly * linear_polynomial(form)
    return poly


def coefficient_vector(poly: Poly) -> Tuple[int, ...]:
    """
    Coordinates of a degree-8 form in the monomial basis.

    Raises:
        DegreeError: If the polynomial has a term of another degree
    """
    vector: List[int] = [0] * OCTIC_DIMENSION
    if poly.is_zero:
        return tuple(vector)
    for exponent, coefficient in poly.terms():
        index = MONOMIAL_INDEX.get(tuple(exponent))
        if index is None:
            raise DegreeError(f"Term {monomial_name(tuple(exponent))} is not of degree {OCTIC_DEGREE}")
        vector[index] = int(coefficient)
    return tuple(vector)


def as_polynomial(f: Union[Arrangement, Poly]) -> Poly:
    if isinstance(f, Arrangement):
        return octic_polynomial(f)
    return Poly(f.as_expr(), *GENERATORS, domain=ZZ)
