"""Arrangement documents: parsing, parameter substitution and export."""
import json
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from src.arrangement.expressions import CoefficientEvaluator
from src.arrangement.forms import Arrangement, LinearForm
from src.errors import DegreeError, DuplicatePlaneError, ParseError
from src.exact.rational import format_rational, parse_rational

OCTIC_DEGREE = 8

Coefficient = Union[str, int]


class ArrangementDocument(BaseModel):
    """JSON shape of an arrangement: eight planes of four coefficients each."""

    name: str
    planes: List[List[Coefficient]]
    scale: int = 1
    params: Dict[str, Coefficient] = Field(default_factory=dict)


def parse(
    document: Union[Mapping, str, ArrangementDocument],
    params: Optional[Mapping[str, Coefficient]] = None,
    scale: Optional[int] = None,
) -> Arrangement:
    """
    Build an arrangement from its document.

    Args:
        document: Mapping, JSON text or ArrangementDocument
        params: Parameter values overriding the document's own
        scale: Scale overriding the document's own

    Returns:
        Arrangement with normalized forms

    Raises:
        ParseError: Malformed document or coefficient
        DegreeError: Total degree is not 8
        DuplicatePlaneError: Two planes coincide
        UnboundParameterError: A coefficient uses a parameter with no value
    """
    doc = _load_document(document)
    values = {k: parse_rational(v) for k, v in doc.params.items()}
    if params:
        values.update({k: parse_rational(v) for k, v in params.items()})
    evaluator = CoefficientEvaluator(values)

    if len(doc.planes) != OCTIC_DEGREE:
        raise DegreeError(f"Expected {OCTIC_DEGREE} planes, got {len(doc.planes)}")

    forms = []
    for index, plane in enumerate(doc.planes):
        if len(plane) != 4:
            raise ParseError(f"Plane {index} needs 4 coefficients, got {len(plane)}")
        forms.append(LinearForm.from_coefficients([_coefficient(c, evaluator) for c in plane]))

    seen = {}
    for index, form in enumerate(forms):
        if form in seen:
            raise DuplicatePlaneError(f"Planes {seen[form]} and {index} coincide: {form}")
        seen[form] = index

    return Arrangement(name=doc.name, forms=tuple(forms), scale=doc.scale if scale is None else scale)


def _load_document(document) -> ArrangementDocument:
    if isinstance(document, ArrangementDocument):
        return document
    try:
        if isinstance(document, str):
            return ArrangementDocument.model_validate_json(document)
        return ArrangementDocument.model_validate(document)
    except ValidationError as e:
        raise ParseError(f"Malformed arrangement document: {e}")


def _coefficient(value: Coefficient, evaluator: CoefficientEvaluator):
    if isinstance(value, int) and not isinstance(value, bool):
        return parse_rational(value)
    try:
        return parse_rational(value)
    except ParseError:
        return evaluator.evaluate(value)


def load(
    path: Union[str, Path],
    params: Optional[Mapping[str, Coefficient]] = None,
    scale: Optional[int] = None,
) -> Arrangement:
    """Parse an arrangement document stored as a JSON file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"Cannot read arrangement file {path}: {e}")
    return parse(text, params, scale)


def export(arrangement: Arrangement) -> Dict:
    """The arrangement as a document with "num/den" coefficient strings."""
    return {
        "name": arrangement.name,
        "planes": [[format_rational(c) for c in form.coefficients] for form in arrangement.forms],
        "scale": arrangement.scale,
    }


def parse_params(text: str) -> Dict[str, str]:
    """Parse "A=1,B=3/2" into {"A": "1", "B": "3/2"}."""
    params: Dict[str, str] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep or not name.strip() or not value.strip():
            raise ParseError(f"Malformed parameter assignment: {item!r}")
        params[name.strip()] = value.strip()
    return params


def dumps(arrangement: Arrangement) -> str:
    return json.dumps(export(arrangement), indent=2)
