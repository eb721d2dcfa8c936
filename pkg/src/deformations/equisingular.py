"""Number of equisingular deformations of an arrangement.

h = dim I_eq - dim Jf in degree 8, where I_eq is the intersection over all
strata of (stratum ideal + Jf). Working with annihilators, the conditions of
(S + Jf) are the combinations c of the stratum conditions Phi with
c Phi Jf^T = 0, and the annihilator of the intersection is the span of all of
them.

The default path does this modulo two random primes of about 62 bits and
accepts the rank when both agree with each other and with the exact rank of
Jf; otherwise it repeats the computation exactly over Q.
"""
from concurrent.futures import ThreadPoolExecutor
import logging
import random
from typing import Optional, Sequence, Tuple

import numpy as np

from src.arrangement.forms import Arrangement
from src.arrangement.incidence import IncidenceData, classify, validate
from src.deformations.monomials import OCTIC_DIMENSION
from src.deformations.strata import (
    OcticSubspace, Stratum, jacobian_rows, stratum_conditions, stratum_subspace, strata
)
from src.errors import AdmissibilityError
from src.exact.fields import random_prime
from src.exact.linalg import (
    MODULAR_PRIME_BITS, RationalMatrix, left_nullspace_mod_p, matmul_mod_p, rank_mod_p, to_residues
)
from src.invariants.hodge import blown_up_genus_sum
from src.models import DeformationSummary

logger = logging.getLogger(__name__)

DEFAULT_RANK_SEED = 20050


def equisingular_subspace(jacobian: OcticSubspace, selected: Sequence[Stratum]) -> OcticSubspace:
    """I_eq in degree 8, computed exactly."""
    ideal = OcticSubspace.everything()
    for stratum in selected:
        ideal = ideal.intersect(stratum_subspace(stratum).sum(jacobian))
        ideal = OcticSubspace(conditions=ideal.annihilator)
    return ideal


def _annihilator_rank_mod_p(
    jacobian: RationalMatrix,
    conditions: Sequence[RationalMatrix],
    p: int,
) -> Tuple[int, int]:
    """(rank of Jf, rank of the annihilator of I_eq) modulo p."""
    jac = to_residues(jacobian.rows, p, OCTIC_DIMENSION)
    blocks = []
    for phi in conditions:
        if phi.nrows == 0:
            continue
        residues = to_residues(phi.rows, p, OCTIC_DIMENSION)
        pairing = matmul_mod_p(residues, jac.T, p)
        coefficients = left_nullspace_mod_p(pairing, p)
        if coefficients.shape[0]:
            blocks.append(matmul_mod_p(coefficients, residues, p))
    stacked = np.vstack(blocks) if blocks else np.zeros((0, OCTIC_DIMENSION), dtype=np.int64)
    return rank_mod_p(jac, p), rank_mod_p(stacked, p)


def _modular_dimension(
    jacobian: RationalMatrix,
    conditions: Sequence[RationalMatrix],
    dim_jf: int,
    rank_primes: int,
    seed: int,
) -> Optional[int]:
    rng = random.Random(seed)
    low, high = 1 << (MODULAR_PRIME_BITS - 1), 1 << MODULAR_PRIME_BITS
    ranks = set()
    for _ in range(rank_primes):
        p = random_prime(low, high, rng)
        jac_rank, rank = _annihilator_rank_mod_p(jacobian, conditions, p)
        logger.debug("Modular rank at p=%d: Jf %d, annihilator %d", p, jac_rank, rank)
        if jac_rank != dim_jf:
            logger.warning("Prime %d reduces the Jacobian rank; falling back to exact ranks", p)
            return None
        ranks.add(rank)
    if len(ranks) != 1:
        logger.warning("Modular ranks disagree (%s); falling back to exact ranks", sorted(ranks))
        return None
    return OCTIC_DIMENSION - ranks.pop()


def deformation_summary(
    arrangement: Arrangement,
    incidence: Optional[IncidenceData] = None,
    *,
    exact: bool = False,
    rank_primes: int = 2,
    rank_seed: int = DEFAULT_RANK_SEED,
    min_point_multiplicity: int = 3,
    threads: int = 1,
) -> DeformationSummary:
    """
    Count the equisingular deformations of an admissible arrangement.

    Args:
        arrangement: Eight-plane arrangement
        incidence: Its classification over Q, computed when omitted
        exact: Skip the modular fast path
        rank_primes: Number of random primes for the modular path
        rank_seed: Seed of the prime draw
        min_point_multiplicity: Smallest point multiplicity used as a stratum
        threads: Workers building stratum conditions

    Returns:
        DeformationSummary with h12, dim Jf and dim I_eq

    Raises:
        AdmissibilityError: If the arrangement violates the Calabi-Yau criterion
    """
    incidence = incidence or classify(arrangement)
    verdict = validate(incidence)
    if not verdict.admissible:
        raise AdmissibilityError(f"{arrangement.name}: {verdict.reason}", verdict.locus)

    selected = strata(incidence, min_point_multiplicity)
    jacobian_matrix = RationalMatrix.from_rows(jacobian_rows(arrangement), OCTIC_DIMENSION)
    jacobian = OcticSubspace(spanning=jacobian_matrix)
    dim_jf = jacobian.dim
    logger.info("Deformations of %s: %d strata, dim Jf = %d", arrangement.name, len(selected), dim_jf)

    dim_ieq = None
    method = "exact"
    if not exact:
        with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
            conditions = list(pool.map(stratum_conditions, selected))
        dim_ieq = _modular_dimension(jacobian_matrix, conditions, dim_jf, rank_primes, rank_seed)
        method = "modular"
    if dim_ieq is None:
        dim_ieq = equisingular_subspace(jacobian, selected).dim
        method = "exact"

    equisingular = dim_ieq - dim_jf
    return DeformationSummary(
        h12=blown_up_genus_sum(incidence) + equisingular,
        equisingular=equisingular,
        dim_jf=dim_jf,
        dim_ieq=dim_ieq,
        strata=len(selected),
        method=method,
    )


def equisingular_dimension(arrangement: Arrangement, **options) -> int:
    """Number of equisingular deformations h; options as for deformation_summary."""
    return deformation_summary(arrangement, **options).equisingular
