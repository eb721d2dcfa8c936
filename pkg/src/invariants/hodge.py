"""Hodge numbers of the Calabi-Yau threefold from e, h12 and rho(Y)."""
import logging
from typing import List, Optional, Sequence, Tuple

from src.arrangement.incidence import IncidenceData
from src.errors import InconsistentInvariantsError
from src.invariants.formulas import euler, picard_rank_Y
from src.models import InvariantSet

logger = logging.getLogger(__name__)

PLANE_DEGREES = (1,) * 8
LINE_GENUS = 0


def hodge(e: int, h12: int, rho: int) -> Tuple[int, int]:
    """
    Derive h11 and the skew-symmetric Picard rank.

    Args:
        e: Euler characteristic (even)
        h12: Number of complex deformations
        rho: Picard rank of Y

    Returns:
        (h11, skew_rank) with skew_rank = h11 - rho

    Raises:
        InconsistentInvariantsError: If e is odd, h11 is negative or
            rho exceeds h11
    """
    if e % 2:
        raise InconsistentInvariantsError(f"Euler characteristic {e} is odd")
    h11 = h12 + e // 2
    if h11 < 0:
        raise InconsistentInvariantsError(f"h11 = {h12} + {e}/2 is negative")
    skew = h11 - rho
    if skew < 0:
        raise InconsistentInvariantsError(
            f"Picard rank {rho} of Y exceeds h11 = {h11}; e={e}, h12={h12}"
        )
    return h11, skew


def hodge_diamond(h11: int, h12: int) -> List[List[int]]:
    """
    Hodge numbers h^{p,q} of a Calabi-Yau threefold, row p = 0..3.

    Returns:
        4x4 matrix with [p][q] = h^{p,q}
    """
    diamond = [[0] * 4 for _ in range(4)]
    for p, q in ((0, 0), (3, 3), (3, 0), (0, 3)):
        diamond[p][q] = 1
    diamond[1][1] = diamond[2][2] = h11
    diamond[1][2] = diamond[2][1] = h12
    return diamond


def betti_numbers(h11: int, h12: int) -> List[int]:
    """b0..b6 of a Calabi-Yau threefold."""
    return [1, 0, h11, 2 + 2 * h12, h11, 0, 1]


def blown_up_genus_sum(incidence: IncidenceData) -> int:
    """Sum of the genera of the blown-up curves; every curve of a plane arrangement is a line."""
    return LINE_GENUS * (len(incidence.double_lines) + len(incidence.triple_lines))


def compute_invariants(
    incidence: IncidenceData,
    equisingular: int,
    degrees: Optional[Sequence[int]] = None,
) -> InvariantSet:
    """
    Assemble the invariant set of an admissible arrangement.

    Args:
        incidence: Classified arrangement over Q
        equisingular: Number of equisingular deformations
        degrees: Component degrees, eight planes by default

    Returns:
        InvariantSet with h12 = h12(Y) + equisingular
    """
    degrees = tuple(degrees or PLANE_DEGREES)
    c = incidence.counters
    e = euler(degrees, c.p4_0, c.p4_1, c.p5_0, c.p5_1, c.p5_2, c.l3)
    rho = picard_rank_Y(len(degrees), c.p4_0, c.p4_1, c.p5_0, c.p5_1, c.p5_2, c.l3)
    h12 = blown_up_genus_sum(incidence) + equisingular
    h11, skew = hodge(e, h12, rho)
    logger.debug("Invariants: e=%d rho=%d h11=%d h12=%d skew=%d", e, rho, h11, h12, skew)
    return InvariantSet(counters=c, e=e, rho_Y=rho, h11=h11, h12=h12, skew_rank=skew)
