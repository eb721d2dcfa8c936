"""Rational number helpers on top of fractions.Fraction.

Rationals travel as "num/den" strings (the denominator is omitted when it is 1),
which is also what ``str(Fraction)`` produces.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import factorint

from src.errors import ParseError

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse a rational literal.

    Args:
        value: An int, a Fraction or a "num/den" / "num" string

    Returns:
        The value as a reduced Fraction

    Raises:
        ParseError: If the literal is malformed or has a zero denominator
    """
    if isinstance(value, bool):
        raise ParseError(f"Malformed rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(f"Malformed rational: {value!r}")
    text = value.strip()
    # Fraction() also accepts decimals and exponents; only num/den is allowed here
    num, sep, den = text.partition("/")
    if not _is_integer_literal(num) or (sep and not _is_integer_literal(den, signed=False)):
        raise ParseError(f"Malformed rational: {value!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"Zero denominator in rational: {value!r}")


def _is_integer_literal(text: str, signed: bool = True) -> bool:
    if signed and text[:1] in "+-":
        text = text[1:]
    return text.isdigit()


def format_rational(value: Fraction) -> str:
    """Serialize a rational as "num/den", dropping a unit denominator."""
    return str(Fraction(value))


def primitive_integer_vector(values: Sequence[Fraction]) -> Tuple[int, ...]:
    """
    Scale a rational vector to the integral representative with content 1
    whose first nonzero entry is positive.

    Args:
        values: Rational coordinates, not all zero

    Returns:
        Tuple of integers with gcd 1
    """
    fracs = [Fraction(v) for v in values]
    if all(v == 0 for v in fracs):
        raise ValueError("Cannot normalize the zero vector")
    common = reduce(lcm, (v.denominator for v in fracs), 1)
    ints = [int(v * common) for v in fracs]
    content = reduce(gcd, ints, 0)
    ints = [v // content for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def first_nonzero_normalized(values: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    """Scale a vector so that its first nonzero coordinate equals 1."""
    fracs: List[Fraction] = [Fraction(v) for v in values]
    lead = next((v for v in fracs if v != 0), None)
    if lead is None:
        raise ValueError("Cannot normalize the zero vector")
    return tuple(v / lead for v in fracs)


def squarefree_part(n: int) -> int:
    """Squarefree part of a nonzero integer, keeping its sign."""
    if n == 0:
        raise ValueError("Zero has no squarefree part")
    sign = -1 if n < 0 else 1
    result = 1
    for q, exponent in factorint(abs(n)).items():
        if exponent % 2:
            result *= int(q)
    return sign * result


def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_part(n) == n
