"""Weight-4 newforms with their coefficients at the table primes."""
from dataclasses import dataclass, field
import logging
from typing import Dict, Mapping, Optional, Tuple

from src.errors import InconsistentInvariantsError, UnknownNewformError
from src.models import ModularityResult

logger = logging.getLogger(__name__)

TABLE_PRIMES: Tuple[int, ...] = (5, 7, 11, 13, 17, 19, 23, 73)


@dataclass(frozen=True)
class NewformRef:
    """A newform of weight 4 on Gamma_0(level), labelled as in Stein's tables."""

    label: str
    level: int
    ap_table: Dict[int, int]
    eta_exponents: Optional[Dict[int, int]] = field(default=None)

    def ap_vector(self) -> Tuple[int, ...]:
        return tuple(self.ap_table[p] for p in TABLE_PRIMES)


def _newform(label: str, level: int, values: Tuple[int, ...],
             eta: Optional[Dict[int, int]] = None) -> NewformRef:
    return NewformRef(label, level, dict(zip(TABLE_PRIMES, values)), eta)


NEWFORMS: Dict[str, NewformRef] = {
    form.label: form
    for form in (
        _newform("8k4A", 8, (-2, 24, -44, 22, 50, 44, -56, 154), {2: 4, 4: 4}),
        _newform("32k4C", 32, (-10, -16, 40, -50, -30, -40, -48, -630)),
        _newform("64k4A", 64, (-22, 0, 0, 18, -94, 0, 0, 1098)),
        _newform("16k4A", 16, (-2, -24, 44, 22, 50, -44, 56, 154), {2: -4, 4: 16, 8: -4}),
        _newform("64k4C", 64, (2, -24, -44, -22, 50, 44, 56, 154)),
        _newform("6k4A", 6, (6, -16, 12, 38, -126, 20, 168, 218), {1: 2, 2: 2, 3: 2, 6: 2}),
        _newform("12k4A", 12, (-18, 8, 36, -10, 18, -100, 72, 26)),
    )
}


def check_table(forms: Mapping[str, NewformRef] = NEWFORMS) -> None:
    """
    Raise if two rows coincide, a row is incomplete or an entry breaks the
    Weil bound |a_p| < 2 p^(3/2).
    """
    seen: Dict[Tuple[int, ...], str] = {}
    for label, form in forms.items():
        if set(form.ap_table) != set(TABLE_PRIMES):
            raise InconsistentInvariantsError(f"Newform {label} is missing table primes")
        vector = form.ap_vector()
        if vector in seen:
            raise InconsistentInvariantsError(f"Newforms {seen[vector]} and {label} share a row")
        seen[vector] = label
        for p, value in form.ap_table.items():
            if value * value >= 4 * p ** 3:
                raise InconsistentInvariantsError(f"a_{p} = {value} of {label} breaks the Weil bound")


check_table()


def newform_ap(label: str, p: int) -> int:
    """
    Coefficient a_p of a tabulated newform.

    Raises:
        UnknownNewformError: Unknown label or prime outside the table
    """
    form = NEWFORMS.get(label)
    if form is None:
        raise UnknownNewformError(f"Unknown newform label: {label}")
    if p not in form.ap_table:
        raise UnknownNewformError(f"No coefficient a_{p} tabulated for {label}")
    return form.ap_table[p]


def _agreement(form: NewformRef, ap_vector: Mapping[int, int]) -> Dict[int, bool]:
    return {
        p: form.ap_table[p] == value
        for p, value in sorted(ap_vector.items())
        if p in form.ap_table
    }


def match(ap_vector: Mapping[int, int]) -> Optional[str]:
    """The unique label agreeing with the vector at every tabulated prime it covers."""
    candidates = [
        label for label, form in NEWFORMS.items()
        if (agreement := _agreement(form, ap_vector)) and all(agreement.values())
    ]
    return candidates[0] if len(candidates) == 1 else None


def match_result(ap_vector: Mapping[int, int]) -> ModularityResult:
    """Matched label plus per-prime agreement with the closest newform."""
    ranked = sorted(
        NEWFORMS.values(),
        key=lambda form: -sum(_agreement(form, ap_vector).values()),
    )
    best = ranked[0]
    matched = match(ap_vector)
    reference = NEWFORMS[matched] if matched else best
    logger.debug("Modularity: matched=%s best=%s", matched, best.label)
    return ModularityResult(
        ap_vector=dict(sorted(ap_vector.items())),
        matched_label=matched,
        best_label=reference.label,
        agreement=_agreement(reference, ap_vector),
    )
