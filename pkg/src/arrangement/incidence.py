"""Incidence lattice of a plane arrangement and the admissibility check.

Points on three or more planes are found as the intersections of all triples
of independent planes, deduplicated by their normalized representative. A line
is identified by the set of planes containing it. The same code runs over Q
and over F_p, which is how reductions modulo a prime are compared.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
import logging
from math import gcd
from functools import reduce
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.arrangement.forms import Arrangement, ProjLine, ProjPoint, cross3, intersect_planes
from src.errors import DuplicatePlaneError
from src.models import AdmissibilityVerdict, IncidenceCounters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointIncidence:
    """An arrangement point with multiplicity q lying on i triple lines."""

    coordinates: Tuple[int, ...]
    planes: FrozenSet[int]
    triple_lines: int

    @property
    def multiplicity(self) -> int:
        return len(self.planes)

    @property
    def point(self) -> ProjPoint:
        return ProjPoint.from_coordinates(self.coordinates)

    def tag(self) -> str:
        return f"p{self.multiplicity}^{self.triple_lines}"


@dataclass(frozen=True)
class IncidenceData:
    """Classified singular loci of an arrangement, over Q or over F_p."""

    modulus: Optional[int]
    double_lines: Tuple[ProjLine, ...]
    triple_lines: Tuple[ProjLine, ...]
    excess_lines: Tuple[ProjLine, ...]
    points: Tuple[PointIncidence, ...]
    counters: IncidenceCounters

    def points_of(self, multiplicity: int, triple_lines: Optional[int] = None) -> List[PointIncidence]:
        return [
            pt for pt in self.points
            if pt.multiplicity == multiplicity
            and (triple_lines is None or pt.triple_lines == triple_lines)
        ]

    @property
    def excess_points(self) -> List[PointIncidence]:
        return [pt for pt in self.points if pt.multiplicity >= 6]


class _Field:
    """Vector helpers over Q (modulus None, integer vectors) or over F_p."""

    def __init__(self, modulus: Optional[int]):
        self.modulus = modulus

    def reduce(self, vector: Sequence[int]) -> Tuple[int, ...]:
        if self.modulus is None:
            return tuple(vector)
        return tuple(v % self.modulus for v in vector)

    def is_zero(self, vector: Sequence[int]) -> bool:
        return all(v == 0 for v in self.reduce(vector))

    def normalize(self, vector: Sequence[int]) -> Tuple[int, ...]:
        vector = self.reduce(vector)
        if self.modulus is None:
            content = reduce(gcd, vector, 0)
            lead = next(v for v in vector if v != 0)
            sign = -1 if lead < 0 else 1
            return tuple(sign * v // content for v in vector)
        lead = next(v for v in vector if v != 0)
        inv = pow(lead, -1, self.modulus)
        return tuple(v * inv % self.modulus for v in vector)

    def vanishes(self, form: Sequence[int], point: Sequence[int]) -> bool:
        value = sum(a * b for a, b in zip(form, point))
        return value == 0 if self.modulus is None else value % self.modulus == 0


def distinct_planes(arrangement: Arrangement, modulus: Optional[int] = None) -> bool:
    """True if every plane is nonzero and no two planes are proportional (mod p)."""
    field = _Field(modulus)
    forms = [field.reduce(f.coefficients) for f in arrangement.forms]
    if any(field.is_zero(f) for f in forms):
        return False
    normalized = {field.normalize(f) for f in forms}
    return len(normalized) == len(forms)


def classify(arrangement: Arrangement, modulus: Optional[int] = None) -> IncidenceData:
    """
    Classify the multiple lines and points of an arrangement.

    Args:
        arrangement: Pairwise distinct planes
        modulus: Optional odd prime; classify the reduction modulo it

    Returns:
        IncidenceData with lines grouped by multiplicity and tagged points

    Raises:
        DuplicatePlaneError: If two planes coincide (after reduction)
    """
    if not distinct_planes(arrangement, modulus):
        where = "" if modulus is None else f" modulo {modulus}"
        raise DuplicatePlaneError(f"Arrangement {arrangement.name!r} has coinciding planes{where}")

    field = _Field(modulus)
    forms = [field.reduce(f.coefficients) for f in arrangement.forms]
    r = len(forms)

    line_sets = set()
    for i, j in combinations(range(r), 2):
        planes = {i, j}
        planes.update(
            k for k in range(r)
            if k not in planes and field.is_zero(cross3(forms[i], forms[j], forms[k]))
        )
        line_sets.add(frozenset(planes))

    point_planes: Dict[Tuple[int, ...], FrozenSet[int]] = {}
    for i, j, k in combinations(range(r), 3):
        kernel = cross3(forms[i], forms[j], forms[k])
        if field.is_zero(kernel):
            continue
        key = field.normalize(kernel)
        if key not in point_planes:
            point_planes[key] = frozenset(m for m in range(r) if field.vanishes(forms[m], key))

    triple_sets = [planes for planes in line_sets if len(planes) == 3]
    points = tuple(sorted(
        (
            PointIncidence(
                coordinates=key,
                planes=planes,
                triple_lines=sum(1 for line in triple_sets if line <= planes),
            )
            for key, planes in point_planes.items()
        ),
        key=lambda pt: (pt.multiplicity, tuple(sorted(pt.planes)), pt.coordinates),
    ))

    lines = sorted(line_sets, key=lambda planes: (len(planes), tuple(sorted(planes))))
    as_lines = [_make_line(arrangement, planes, modulus) for planes in lines]

    counts = Counter((pt.multiplicity, pt.triple_lines) for pt in points)
    counters = IncidenceCounters(
        p3=sum(n for (q, _), n in counts.items() if q == 3),
        p4_0=counts[(4, 0)],
        p4_1=counts[(4, 1)],
        p5_0=counts[(5, 0)],
        p5_1=counts[(5, 1)],
        p5_2=counts[(5, 2)],
        l3=len(triple_sets),
    )
    logger.debug("Classified %s (modulus=%s): %s", arrangement.name, modulus, counters.as_tuple())
    return IncidenceData(
        modulus=modulus,
        double_lines=tuple(l for l in as_lines if l.multiplicity == 2),
        triple_lines=tuple(l for l in as_lines if l.multiplicity == 3),
        excess_lines=tuple(l for l in as_lines if l.multiplicity >= 4),
        points=points,
        counters=counters,
    )


def _make_line(arrangement: Arrangement, planes: FrozenSet[int], modulus: Optional[int]) -> ProjLine:
    if modulus is not None:
        return ProjLine(None, planes)
    i, j = sorted(planes)[:2]
    return intersect_planes(arrangement.forms[i], arrangement.forms[j], planes)


def validate(data: IncidenceData) -> AdmissibilityVerdict:
    """
    Check the hypotheses of the Calabi-Yau criterion for plane arrangements:
    only double and triple lines, and only points of multiplicity at most 5.
    """
    if data.excess_lines:
        line = data.excess_lines[0]
        return AdmissibilityVerdict(
            admissible=False,
            reason=f"line lies on {line.multiplicity} planes",
            locus=str(line),
        )
    if data.excess_points:
        pt = data.excess_points[0]
        return AdmissibilityVerdict(
            admissible=False,
            reason=f"point lies on {pt.multiplicity} planes",
            locus="(" + ":".join(str(c) for c in pt.coordinates) + ")",
        )
    return AdmissibilityVerdict(admissible=True)
