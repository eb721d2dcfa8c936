"""Closed-form invariants of the resolved double octic.

The counters are those of IncidenceCounters; m2, m4, m5 count nodes, 4-fold
and 5-fold points of non-plane arrangements and default to 0.
"""
from itertools import combinations
from math import comb
from typing import Sequence

from src.errors import DegreeError, OcticError

OCTIC_DEGREE = 8


def _check_nonnegative(**values: int) -> None:
    negative = [name for name, value in values.items() if value < 0]
    if negative:
        raise OcticError(f"Counters must be nonnegative: {', '.join(negative)}")


def euler(
    degrees: Sequence[int],
    p4_0: int = 0,
    p4_1: int = 0,
    p5_0: int = 0,
    p5_1: int = 0,
    p5_2: int = 0,
    l3: int = 0,
    m2: int = 0,
    m4: int = 0,
    m5: int = 0,
) -> int:
    """
    Euler characteristic of the resolved double cover.

    Args:
        degrees: Degrees of the arrangement's components
        p4_0 .. l3: Incidence counters
        m2, m4, m5: Additional singularity counts

    Returns:
        Euler characteristic e

    Raises:
        DegreeError: If the degrees do not sum to 8
    """
    if sum(degrees) != OCTIC_DEGREE:
        raise DegreeError(f"Degrees {tuple(degrees)} sum to {sum(degrees)}, expected {OCTIC_DEGREE}")
    _check_nonnegative(p4_0=p4_0, p4_1=p4_1, p5_0=p5_0, p5_1=p5_1, p5_2=p5_2,
                       l3=l3, m2=m2, m4=m4, m5=m5)

    e = 8 - sum(d ** 3 - 4 * d ** 2 + 6 * d for d in degrees)
    e += 2 * sum((4 - a - b) * a * b for a, b in combinations(degrees, 2))
    e -= sum(a * b * c for a, b, c in combinations(degrees, 3))
    e += 4 * p4_0 + 3 * p4_1 + 16 * p5_0 + 18 * p5_1 + 20 * p5_2 + l3
    e += 2 * m2 + 36 * m4 + 56 * m5
    return e


def picard_rank_Y(
    r: int,
    p4_0: int = 0,
    p4_1: int = 0,
    p5_0: int = 0,
    p5_1: int = 0,
    p5_2: int = 0,
    l3: int = 0,
    m4: int = 0,
    m5: int = 0,
) -> int:
    """Picard rank of the resolved double cover Y of P^3 branched along r components."""
    _check_nonnegative(r=r, p4_0=p4_0, p4_1=p4_1, p5_0=p5_0, p5_1=p5_1, p5_2=p5_2,
                       l3=l3, m4=m4, m5=m5)
    return (
        1 + comb(r, 2)
        + p4_0 + p4_1 + 6 * p5_0 + 7 * p5_1 + 8 * p5_2 + l3
        + m4 + 2 * m5
    )


def h2_omega1_Y(degrees: Sequence[int], r: int = None, m5: int = 0) -> int:
    """h^2(Omega^1_Y); vanishes for arrangements of eight planes."""
    if r is None:
        r = len(degrees)
    pairs = sum(a * b * (a + b - 4) for a, b in combinations(degrees, 2))
    return 6 * m5 + pairs // 2 + comb(r, 2)
