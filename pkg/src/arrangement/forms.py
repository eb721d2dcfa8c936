"""Linear forms, projective points and lines, and plane arrangements."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from src.errors import DuplicatePlaneError, ParseError
from src.exact.linalg import RationalMatrix
from src.exact.rational import (
    first_nonzero_normalized, is_squarefree, primitive_integer_vector, squarefree_part
)

VARIABLES = ("x", "y", "z", "t")


def cross3(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> Tuple[int, ...]:
    """
    Generalized cross product in dimension 4.

    The result v satisfies a.v = b.v = c.v = 0 and vanishes iff a, b, c are
    linearly dependent.
    """
    rows = (a, b, c)
    out = []
    for skip in range(4):
        cols = [j for j in range(4) if j != skip]
        m = [[row[j] for j in cols] for row in rows]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        out.append(-det if skip % 2 else det)
    return tuple(out)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True, order=True)
class LinearForm:
    """a0*x + a1*y + a2*z + a3*t, stored integral with content 1, leading coefficient > 0."""

    coefficients: Tuple[int, int, int, int]

    @classmethod
    def from_coefficients(cls, values: Sequence) -> "LinearForm":
        if len(values) != 4:
            raise ParseError(f"A plane needs 4 coefficients, got {len(values)}")
        fracs = [Fraction(v) for v in values]
        if all(v == 0 for v in fracs):
            raise ParseError("A plane cannot have all coefficients zero")
        return cls(primitive_integer_vector(fracs))

    def __call__(self, point: Sequence):
        return dot(self.coefficients, point)

    def is_proportional(self, other: "LinearForm") -> bool:
        return self.coefficients == other.coefficients

    def transformed(self, matrix: Sequence[Sequence]) -> "LinearForm":
        """The form l(M y) for the coordinate change x = M y."""
        row = [sum(Fraction(self.coefficients[i]) * Fraction(matrix[i][j]) for i in range(4))
               for j in range(4)]
        return LinearForm.from_coefficients(row)

    def __str__(self) -> str:
        terms = []
        for coeff, var in zip(self.coefficients, VARIABLES):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            magnitude = "" if abs(coeff) == 1 else str(abs(coeff))
            terms.append(f"{sign}{magnitude}{var}")
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A point of P^3 with its first nonzero coordinate equal to 1."""

    coordinates: Tuple[Fraction, Fraction, Fraction, Fraction]

    @classmethod
    def from_coordinates(cls, values: Sequence) -> "ProjPoint":
        if len(values) != 4:
            raise ValueError("Projective points in P^3 have 4 coordinates")
        return cls(first_nonzero_normalized(values))

    def primitive(self) -> Tuple[int, ...]:
        """Integral representative with content 1 and first nonzero coordinate positive."""
        return primitive_integer_vector(self.coordinates)

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.primitive()) + ")"


@dataclass(frozen=True)
class ProjLine:
    """
    A line of P^3 given by the canonical pair of spanning points (the rref of
    any spanning pair), together with the indices of the arrangement planes
    containing it.
    """

    spanning: Optional[Tuple[ProjPoint, ProjPoint]]
    planes: FrozenSet[int] = field(default_factory=frozenset)

    @property
    def multiplicity(self) -> int:
        return len(self.planes)

    def defining_forms(self) -> Tuple[LinearForm, LinearForm]:
        """Two independent linear forms cutting out the line (canonical choice)."""
        span = RationalMatrix.from_rows([p.coordinates for p in self.spanning], 4)
        ideal = span.nullspace().row_basis()
        first, second = (LinearForm.from_coefficients(row) for row in ideal.rows)
        return first, second

    def contains(self, point: ProjPoint) -> bool:
        return all(form(point.coordinates) == 0 for form in self.defining_forms())

    def __str__(self) -> str:
        if self.spanning is None:
            return "line on planes " + ",".join(str(i) for i in sorted(self.planes))
        first, second = self.defining_forms()
        return f"{first}={second}=0"


def intersect_planes(f: LinearForm, g: LinearForm, planes: Iterable[int] = ()) -> ProjLine:
    """
    The line {f = 0} ∩ {g = 0}.

    Raises:
        DuplicatePlaneError: If the forms are proportional
    """
    if f.is_proportional(g):
        raise DuplicatePlaneError(f"Planes {f} and {g} coincide")
    kernel = RationalMatrix.from_rows([f.coefficients, g.coefficients], 4).nullspace()
    canonical = kernel.row_basis()
    first, second = (ProjPoint.from_coordinates(row) for row in canonical.rows)
    return ProjLine((first, second), frozenset(planes))


@dataclass(frozen=True)
class Arrangement:
    """A named arrangement of planes; the octic equation is scale * prod(forms)."""

    name: str
    forms: Tuple[LinearForm, ...]
    scale: int = 1

    def __post_init__(self):
        if not is_squarefree(self.scale):
            raise ParseError(f"Scale must be a squarefree nonzero integer, got {self.scale}")
        seen = set()
        for form in self.forms:
            if form in seen:
                raise DuplicatePlaneError(f"Duplicate plane {form} in arrangement {self.name!r}")
            seen.add(form)

    @property
    def degree(self) -> int:
        return len(self.forms)

    def evaluate(self, point: Sequence):
        """Value of scale * prod(forms) at a representative."""
        value = self.scale
        for form in self.forms:
            value *= form(point)
        return value

    def equation(self) -> str:
        factors = "".join(f"({form})" if len(str(form)) > 1 else str(form) for form in self.forms)
        return factors if self.scale == 1 else f"{self.scale}*{factors}"

    def with_scale(self, scale: int) -> "Arrangement":
        return Arrangement(self.name, self.forms, scale)

    def transformed(self, matrix: Sequence[Sequence]) -> "Arrangement":
        """Apply the projective coordinate change x = M y to every plane."""
        return Arrangement(self.name, tuple(f.transformed(matrix) for f in self.forms), self.scale)

    def permuted(self, order: Sequence[int]) -> "Arrangement":
        return Arrangement(self.name, tuple(self.forms[i] for i in order), self.scale)


def twist(arrangement: Arrangement, d: int) -> Arrangement:
    """Multiply the equation by d, keeping the squarefree part of the new scale."""
    return arrangement.with_scale(squarefree_part(arrangement.scale * d))
