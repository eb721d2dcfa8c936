"""Catalog lookup with generic default parameters for the families."""
import logging
from typing import Dict, List, Mapping, Optional, Tuple

from src.arrangement.forms import Arrangement
from src.arrangement.incidence import classify, validate
from src.arrangement.parse import export as export_document
from src.arrangement.parse import parse
from src.catalog.entries import FAMILIES, RIGID, CatalogEntry
from src.errors import CatalogError, OcticError

logger = logging.getLogger(__name__)

PARAMETER_NAMES = ("A", "B", "C", "D")

# (A, B, C, D) draws tried in order until the counters match the expected row
DEFAULT_PARAMETERS: Tuple[Tuple[int, int, int, int], ...] = (
    (1, 3, 5, 7),
    (2, 5, 7, 11),
    (3, 7, 11, 13),
    (5, 2, 13, 3),
    (7, 11, 2, 17),
    (11, 13, 17, 19),
    (2, 9, 4, 23),
)

ENTRIES: Dict[str, CatalogEntry] = {entry.key: entry for entry in RIGID + FAMILIES}


def entry(key: str) -> CatalogEntry:
    """
    Look up a catalog entry.

    Raises:
        CatalogError: If the key is unknown
    """
    found = ENTRIES.get(key)
    if found is None:
        raise CatalogError(f"Unknown catalog key {key!r}; known keys: {', '.join(ENTRIES)}")
    return found


def keys() -> List[str]:
    return list(ENTRIES)


def _draw(item: CatalogEntry, values: Tuple[int, ...]) -> Dict[str, str]:
    named = dict(zip(PARAMETER_NAMES, values))
    return {name: str(named[name]) for name in item.parameters}


def _matches_row(item: CatalogEntry, arrangement: Arrangement) -> bool:
    incidence = classify(arrangement)
    return validate(incidence).admissible and incidence.counters == item.expected.counters


def default_params(key: str) -> Dict[str, str]:
    """
    First parameter draw for which a family reproduces its expected counters.

    Raises:
        CatalogError: If no draw matches
    """
    item = entry(key)
    if not item.is_family:
        return {}
    for values in DEFAULT_PARAMETERS:
        params = _draw(item, values)
        try:
            arrangement = parse(item.document(params))
        except OcticError as e:
            logger.warning("Catalog %s: parameters %s degenerate (%s)", key, params, e)
            continue
        if _matches_row(item, arrangement):
            return params
        logger.warning("Catalog %s: parameters %s miss the expected counters", key, params)
    raise CatalogError(f"No default parameters reproduce the expected row of {key}")


def get(key: str, params: Optional[Mapping[str, str]] = None, scale: Optional[int] = None) -> Arrangement:
    """
    Instantiate a catalog arrangement.

    Args:
        key: Catalog key ("2", "84a", "f42", ...)
        params: Family parameters; the validated defaults when omitted
        scale: Squarefree twist of the equation

    Returns:
        Normalized arrangement

    Raises:
        CatalogError: Unknown key or no admissible default parameters
    """
    item = entry(key)
    if item.is_family and not params:
        params = default_params(key)
    return parse(item.document(params), scale=scale)


def export(key: str, params: Optional[Mapping[str, str]] = None) -> Dict:
    """Arrangement document of a catalog entry with its coefficients evaluated."""
    return export_document(get(key, params))


def listing() -> List[Dict]:
    """Keys with their expected rows and newform labels."""
    return [
        {
            "key": item.key,
            "row": item.expected.row,
            "family": item.is_family,
            "parameters": "".join(item.parameters),
            "expected": item.expected.model_dump(mode="json"),
            "label": item.label,
        }
        for item in ENTRIES.values()
    ]
