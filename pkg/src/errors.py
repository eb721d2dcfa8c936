"""Exception hierarchy for the double octic toolkit.

Every error is also a ValueError so callers that only catch ValueError keep
working.
"""
from typing import Any, Optional


class OcticError(ValueError):
    """Base class for all toolkit errors."""


class ParseError(OcticError):
    """Malformed arrangement document or rational literal."""


class DegreeError(ParseError):
    """Total degree of the arrangement is not 8."""


class DuplicatePlaneError(ParseError):
    """Two planes of an arrangement are proportional."""


class UnboundParameterError(ParseError):
    """A family template references a parameter with no value."""


class AdmissibilityError(OcticError):
    """The arrangement violates the hypotheses of the Calabi-Yau criterion."""

    def __init__(self, message: str, locus: Optional[Any] = None):
        super().__init__(message)
        self.locus = locus


class DimensionMismatchError(OcticError):
    """Subspaces or matrices live in different ambient dimensions."""


class PrecisionMismatchError(OcticError):
    """Truncated series with different precisions were combined."""


class BadPrimeError(OcticError):
    """The prime is not a prime of good reduction for the arrangement."""


class InconsistentInvariantsError(OcticError):
    """Derived invariants contradict each other (e.g. negative skew rank)."""


class CatalogError(OcticError):
    """Unknown catalog key or no admissible parameters for a family."""


class UnknownNewformError(OcticError):
    """Newform label or prime missing from the coefficient table."""


class TableMismatchError(OcticError):
    """Recomputed invariants differ from the expected catalog rows."""

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.details = details


class StageError(OcticError):
    """A pipeline stage failed with an error outside this hierarchy."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"Stage {stage} failed: {type(cause).__name__}: {cause}")
        self.stage = stage
        self.__cause__ = cause
