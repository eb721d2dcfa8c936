"""Point counts of the resolved double octic over F_p.

#X(F_p) = raw count on the singular double cover
        + (p4^1 + 6 p5^0 + 7 p5^1 + 8 p5^2 + l3 + 28)(p + p^2)
        + sum over the p4^0 points of (#exceptional double plane - 1)

The raw count sums 1 + chi(scale * f) over P^3(F_p). Blowing up a 4-fold
point not on a triple line replaces one point of the cover by the double
plane w^2 = c * l1 l2 l3 l4, where the li are the incident planes seen from
the point and c is the product of the other four forms at the point.
"""
from concurrent.futures import ThreadPoolExecutor
import logging
from functools import lru_cache
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from src import catalog
from src.arrangement.forms import Arrangement, LinearForm
from src.arrangement.incidence import IncidenceData, PointIncidence, classify, validate
from src.arithmetic.enumeration import block_points, projective_prefixes
from src.errors import DuplicatePlaneError, OcticError
from src.exact.fields import is_prime, legendre_table
from src.exact.linalg import rank_mod_p
from src.models import PrimeVerdict

logger = logging.getLogger(__name__)

# double lines of a generic arrangement, one (p + p^2) each
LINE_CONSTANT = 28

# catalog arrangements whose reduction modulo 3 is still smooth after resolution
GOOD_AT_THREE = ("2", "6", "23", "43", "61", "85")


@lru_cache(maxsize=None)
def _planes_good_at_three() -> Tuple[FrozenSet[LinearForm], ...]:
    return tuple(frozenset(catalog.get(key).forms) for key in GOOD_AT_THREE)


def good_at_three(arrangement: Arrangement) -> bool:
    """Whether the planes are those of a catalog arrangement that stays smooth modulo 3."""
    return frozenset(arrangement.forms) in _planes_good_at_three()


def good_prime(arrangement: Arrangement, p: int, incidence: Optional[IncidenceData] = None) -> PrimeVerdict:
    """
    Decide whether p is a prime of good reduction.

    Accepts p >= 5 (and p = 3 for the arrangements known to stay smooth) when
    p does not divide the scale and reduction modulo p keeps the planes
    distinct and the incidence counters unchanged.
    """
    def reject(reason: str) -> PrimeVerdict:
        return PrimeVerdict(p=p, good=False, reason=reason)

    if not is_prime(p):
        return reject(f"{p} is not prime")
    if p == 2:
        return reject("the double cover degenerates in characteristic 2")
    if p == 3 and not good_at_three(arrangement):
        return reject("p = 3 is bad for this arrangement")
    if arrangement.scale % p == 0:
        return reject(f"{p} divides the scale {arrangement.scale}")

    incidence = incidence or classify(arrangement)
    try:
        reduced = classify(arrangement, modulus=p)
    except DuplicatePlaneError:
        return reject(f"planes coincide modulo {p}")
    if not validate(reduced).admissible:
        return reject(f"reduction modulo {p} is not admissible")
    if reduced.counters != incidence.counters or len(reduced.double_lines) != len(incidence.double_lines):
        return reject(f"incidence changes modulo {p}")
    return PrimeVerdict(p=p, good=True)


def _forms_mod_p(arrangement: Arrangement, p: int) -> np.ndarray:
    return np.array([f.coefficients for f in arrangement.forms], dtype=np.int64) % p


def _character_sum(points: np.ndarray, forms: np.ndarray, scale: int, p: int) -> int:
    """Sum of 1 + chi(scale * prod forms) over the given representatives."""
    values = points @ forms.T % p
    product = np.full(points.shape[0], scale % p, dtype=np.int64)
    for column in values.T:
        product = product * column % p
    return int(points.shape[0] + legendre_table(p)[product].sum(dtype=np.int64))


def _chunked(items: List, chunks: Optional[int]) -> List[List]:
    if not chunks or chunks >= len(items):
        return [[item] for item in items]
    size, extra = divmod(len(items), chunks)
    groups, start = [], 0
    for i in range(chunks):
        end = start + size + (1 if i < extra else 0)
        groups.append(items[start:end])
        start = end
    return groups


def _projective_character_sum(
    forms: np.ndarray, scale: int, p: int, n: int, threads: int = 1, chunks: Optional[int] = None
) -> int:
    groups = _chunked(projective_prefixes(p, n), chunks)

    def count(group) -> int:
        return sum(_character_sum(block_points(prefix, p, n), forms, scale, p) for prefix in group)

    if threads <= 1:
        partial = [count(group) for group in groups]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partial = list(pool.map(count, groups))
    return sum(partial)


def count_singular(
    arrangement: Arrangement, p: int, threads: int = 1, chunks: Optional[int] = None
) -> int:
    """
    Points of the singular double cover over F_p.

    Args:
        arrangement: Eight-plane arrangement
        p: Good prime
        threads: Worker threads (speed only)
        chunks: Number of enumeration chunks, one per block by default

    Returns:
        Sum over P^3(F_p) of 1 + legendre(scale * f)
    """
    raw = _projective_character_sum(_forms_mod_p(arrangement, p), arrangement.scale, p, 3, threads, chunks)
    logger.debug("Raw count of %s at p=%d: %d", arrangement.name, p, raw)
    return raw


def line_corrections(incidence: IncidenceData, p: int) -> int:
    """Points added by blowing up the multiple lines and the 5-fold points."""
    c = incidence.counters
    weight = c.p4_1 + 6 * c.p5_0 + 7 * c.p5_1 + 8 * c.p5_2 + c.l3 + LINE_CONSTANT
    return weight * (p + p * p)


def _default_complement(point: Sequence[int], p: int) -> List[List[int]]:
    lead = next(k for k, v in enumerate(point) if v % p)
    return [[1 if j == k else 0 for j in range(4)] for k in range(4) if k != lead]


def fourfold_correction(
    arrangement: Arrangement,
    point: PointIncidence,
    p: int,
    complement: Optional[Sequence[Sequence[int]]] = None,
) -> int:
    """
    Points gained by replacing a 4-fold point with its exceptional double plane.

    Args:
        arrangement: Arrangement containing the point
        point: A 4-fold point of the arrangement
        p: Good prime
        complement: Three vectors spanning a complement of the point mod p

    Returns:
        #{w^2 = c * l1 l2 l3 l4 over P^2(F_p)} - 1

    Raises:
        OcticError: If the point is not 4-fold or the complement is degenerate
    """
    if point.multiplicity != 4:
        raise OcticError(f"Point {point.point} lies on {point.multiplicity} planes, not 4")
    coords = point.point.primitive()
    basis = np.array(complement if complement is not None else _default_complement(coords, p),
                     dtype=np.int64) % p
    if basis.shape != (3, 4) or rank_mod_p(np.vstack([basis, np.array([coords]) % p]), p) != 4:
        raise OcticError(f"Complement does not span a complement of {point.point} modulo {p}")

    incident = sorted(point.planes)
    forms = _forms_mod_p(arrangement, p)
    restricted = forms[incident] @ basis.T % p
    twist = arrangement.scale
    for k, form in enumerate(arrangement.forms):
        if k not in point.planes:
            twist *= form(coords)
    return _projective_character_sum(restricted, twist % p, p, 2) - 1


def fourfold_corrections(arrangement: Arrangement, incidence: IncidenceData, p: int) -> int:
    """Sum of the 4-fold corrections over the points on no triple line."""
    return sum(fourfold_correction(arrangement, pt, p) for pt in incidence.points_of(4, 0))
