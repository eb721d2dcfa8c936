"""Arrangement package - plane arrangements and their incidence lattice."""

from src.arrangement.forms import (
    Arrangement, LinearForm, ProjLine, ProjPoint, intersect_planes, twist
)
from src.arrangement.incidence import (
    AdmissibilityVerdict, IncidenceCounters, IncidenceData, PointIncidence, classify, validate
)
from src.arrangement.parse import ArrangementDocument, export, load, parse, parse_params

__all__ = [
    'AdmissibilityVerdict',
    'Arrangement',
    'ArrangementDocument',
    'IncidenceCounters',
    'IncidenceData',
    'LinearForm',
    'PointIncidence',
    'ProjLine',
    'ProjPoint',
    'classify',
    'export',
    'intersect_planes',
    'load',
    'parse',
    'parse_params',
    'twist',
    'validate',
]
