"""Built-in arrangements: the rigid ones and the one-parameter families.

Planes are listed as (x, y, z, t) coefficients; family coefficients are
expressions in the parameters A, B, C, D.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel

from src.models import IncidenceCounters, IntStr

X, Y, Z, T = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
TETRAHEDRON = [X, Y, Z, T]
CUBE = [(1, 0, 0, -1), (1, 0, 0, 1), (0, 1, 0, -1), (0, 1, 0, 1), (0, 0, 1, -1), (0, 0, 1, 1)]


class Table1Row(BaseModel):
    """Expected numerical data and Hodge numbers of an arrangement."""

    model_config = {"frozen": True}

    row: IntStr
    counters: IncidenceCounters
    h12: IntStr
    h11: IntStr
    e: IntStr

    @classmethod
    def of(cls, row: int, values: Sequence[int]) -> "Table1Row":
        p3, p4_0, p4_1, p5_0, p5_1, p5_2, l3, h12, h11, e = values
        counters = IncidenceCounters(p3=p3, p4_0=p4_0, p4_1=p4_1, p5_0=p5_0,
                                     p5_1=p5_1, p5_2=p5_2, l3=l3)
        return cls(row=row, counters=counters, h12=h12, h11=h11, e=e)

    def as_tuple(self) -> Tuple[int, ...]:
        return self.counters.as_tuple() + (self.h12, self.h11, self.e)


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    planes: Tuple[Tuple, ...]
    expected: Table1Row
    label: Optional[str] = None
    parameters: Tuple[str, ...] = ()

    @property
    def is_family(self) -> bool:
        return bool(self.parameters)

    def document(self, params=None) -> dict:
        return {
            "name": self.key,
            "planes": [[str(c) for c in plane] for plane in self.planes],
            "params": dict(params or {}),
        }


def _rigid(key: str, row: int, values, label: str, planes: List) -> CatalogEntry:
    return CatalogEntry(key, tuple(tuple(p) for p in planes), Table1Row.of(row, values), label)


def _family(row: int, values, parameters: str, planes: List) -> CatalogEntry:
    return CatalogEntry(
        f"f{row}", tuple(tuple(p) for p in planes), Table1Row.of(row, values),
        parameters=tuple(parameters),
    )


RIGID = [
    _rigid("2", 2, (4, 1, 4, 0, 0, 4, 4, 0, 70, 140), "8k4A",
           TETRAHEDRON + [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)]),
    _rigid("6", 6, (8, 3, 3, 0, 0, 3, 3, 0, 62, 124), "32k4C",
           [X, Y, (1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1), (0, 1, -1, 0), (0, 1, 0, -1),
            (1, 2, -1, -1)]),
    _rigid("23", 23, (9, 4, 4, 0, 1, 1, 2, 0, 54, 108), "64k4A",
           TETRAHEDRON + [(1, 1, 0, 0), (1, 0, 1, 0), (1, 1, 1, 1), (0, 1, -1, -1)]),
    _rigid("43", 43, (14, 5, 1, 0, 2, 0, 1, 0, 50, 100), "16k4A",
           [X, Y, Z, (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1), (1, 1, 1, -1), (1, -1, 1, -1)]),
    _rigid("61", 61, (13, 6, 3, 0, 1, 0, 1, 0, 46, 92), "64k4C",
           [X, Y, Z, (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1), (1, 1, 1, -2), (1, 1, 0, 0)]),
    _rigid("84", 84, (16, 10, 0, 0, 0, 0, 0, 0, 40, 80), "6k4A",
           CUBE + [(1, 1, 1, 1), (1, 1, 1, -3)]),
    _rigid("84a", 84, (16, 10, 0, 0, 0, 0, 0, 0, 40, 80), "12k4A",
           CUBE + [(1, 1, 1, -1), (1, 1, 1, -3)]),
    _rigid("85", 85, (8, 12, 0, 0, 0, 0, 0, 0, 44, 88), "8k4A",
           CUBE + [(1, 1, 1, 1), (1, 1, 1, -1)]),
]

FAMILIES = [
    _family(1, (8, 0, 4, 0, 0, 4, 4, 1, 69, 136), "AB",
            TETRAHEDRON + [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), ("A", 0, 0, "B")]),
    _family(5, (12, 2, 3, 0, 0, 3, 3, 1, 61, 120), "AB",
            [X, Y, (1, -1, 0, 0), (0, 1, -1, 0), (0, 1, 0, -1), (1, 0, -1, 0), (1, 0, 0, -1),
             ("A", "B", "-A", "A-B")]),
    _family(10, (8, 2, 7, 0, 0, 2, 3, 1, 57, 112), "AB",
            TETRAHEDRON + [(1, 1, 0, 0), (1, 0, 0, 1), (0, 0, 1, 1), ("A", "A-B", "B-A", "B")]),
    _family(11, (9, 1, 5, 0, 1, 2, 3, 1, 61, 120), "BC",
            TETRAHEDRON + [(1, 1, 0, 0), (1, 0, 0, 1), (0, 0, 1, 1), (0, "B", "C", "C-B")]),
    _family(14, (6, 0, 7, 0, 2, 1, 3, 1, 61, 120), "AB",
            TETRAHEDRON + [(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, -1, 1), (0, "A", "-A", "B")]),
    _family(18, (14, 2, 2, 0, 2, 1, 2, 1, 57, 112), "AB",
            TETRAHEDRON + [(1, 1, 0, 0), (1, 0, 1, 0), ("A", "B", 0, "A"), ("A", 0, "B", "A")]),
    # degenerates to arrangement 23 at A = C
    _family(22, (13, 3, 4, 0, 1, 1, 2, 1, 53, 104), "AC",
            TETRAHEDRON + [(1, 1, 0, 0), (1, 0, 1, 0), (1, 1, 1, 1), (0, "A", "-C", "-C")]),
    _family(28, (12, 4, 6, 0, 0, 1, 2, 1, 49, 96), "AB",
            TETRAHEDRON + [(1, 1, 0, 0), (1, 0, 1, 0), (0, "A", "-A", "B"), (1, 1, 1, 1)]),
    _family(31, (10, 2, 6, 0, 2, 0, 2, 1, 53, 104), "D",
            TETRAHEDRON + [(1, 1, 0, 0), (0, 0, 1, 1), (0, 1, 1, "D"), ("-D/(1-D)", 1, 1, 0)]),
    _family(42, (18, 4, 1, 0, 2, 0, 1, 1, 49, 96), "AB",
            TETRAHEDRON + [(1, 1, 1, 1), ("A", "B", "A", "B"), ("A*B", "B**2", "A**2", "A*B"),
                           ("A**2", "A*B", "A*B", "B**2")]),
    _family(54, (16, 6, 5, 0, 0, 0, 1, 1, 41, 80), "BC",
            TETRAHEDRON + [(1, 1, 1, 1), (0, "B", "C", "C"), ("B", 0, "-C", "B"),
                           ("B", "B", 0, "B+C")]),
    _family(60, (17, 5, 3, 0, 1, 0, 1, 1, 45, 88), "AB",
            TETRAHEDRON + [(1, 1, 1, 1), (0, "A", "A", "B"), ("A", 0, "A", "B"),
                           ("A", "A", "2*A", "A*B")]),
    _family(82, (20, 9, 0, 0, 0, 0, 0, 1, 39, 76), "AB",
            CUBE + [("A", "B", "B", "-A"), ("A", "B", "B", "A+2*B")]),
    _family(83, (16, 10, 0, 0, 0, 0, 0, 1, 41, 80), "AB",
            CUBE + [("A", "B", "B", "-A"), ("A", "B", "B", "A")]),
]

GENERIC_ROW = Table1Row.of(72, (56, 0, 0, 0, 0, 0, 0, 9, 29, 40))
