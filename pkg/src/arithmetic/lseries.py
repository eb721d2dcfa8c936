"""Traces of Frobenius and L-series coefficients from point counts."""
import logging
from typing import Iterable, List, Optional

from src.arrangement.forms import Arrangement
from src.arrangement.incidence import IncidenceData, classify
from src.arithmetic.counting import count_singular, fourfold_corrections, good_prime, line_corrections
from src.errors import BadPrimeError, InconsistentInvariantsError
from src.models import CountRecord, InvariantSet

logger = logging.getLogger(__name__)


def frobenius_traces(p: int, h11: int, a_p: int) -> List[int]:
    """Traces t0..t6 of Frobenius on H^0..H^6 of a Calabi-Yau threefold."""
    return [1, 0, p * h11, a_p, p * p * h11, 0, p ** 3]


def lefschetz_count(traces: List[int]) -> int:
    return sum((-1) ** i * t for i, t in enumerate(traces))


def weil_bound_holds(a_p: int, p: int, h12: int) -> bool:
    """|a_p| <= b3 * p^(3/2) with b3 = 2 + 2 h12, compared in integers."""
    return a_p * a_p <= 4 * (1 + h12) ** 2 * p ** 3


def count_record(
    arrangement: Arrangement,
    p: int,
    h11: int,
    h12: Optional[int] = None,
    incidence: Optional[IncidenceData] = None,
    threads: int = 1,
    chunks: Optional[int] = None,
) -> CountRecord:
    """
    Count points of the resolved double cover over F_p and derive a_p.

    Args:
        arrangement: Eight-plane arrangement
        p: Prime to count at
        h11: h^{1,1} of the Calabi-Yau threefold
        h12: h^{1,2}; enables the Weil bound check when given
        incidence: Classification over Q, computed when omitted
        threads: Worker threads for the enumeration
        chunks: Number of enumeration chunks

    Returns:
        CountRecord with the correction breakdown

    Raises:
        BadPrimeError: If p is not a prime of good reduction
        InconsistentInvariantsError: If a_p violates the Weil bound
    """
    incidence = incidence or classify(arrangement)
    verdict = good_prime(arrangement, p, incidence)
    if not verdict.good:
        raise BadPrimeError(f"{p} is a bad prime for {arrangement.name}: {verdict.reason}")

    raw = count_singular(arrangement, p, threads=threads, chunks=chunks)
    line_corr = line_corrections(incidence, p)
    fourfold_corr = fourfold_corrections(arrangement, incidence, p)
    total = raw + line_corr + fourfold_corr
    trace = 1 + p ** 3 + h11 * (p + p * p) - total

    if h12 is not None and not weil_bound_holds(trace, p, h12):
        raise InconsistentInvariantsError(
            f"a_{p} = {trace} violates the Weil bound for h12 = {h12}"
        )
    traces = frobenius_traces(p, h11, trace)
    if lefschetz_count(traces) != total:
        raise InconsistentInvariantsError(f"Frobenius traces at p={p} do not reproduce the count")

    logger.info("%s at p=%d: total %d, a_p = %d", arrangement.name, p, total, trace)
    return CountRecord(
        p=p,
        raw=raw,
        line_corr=line_corr,
        fourfold_corr=fourfold_corr,
        total=total,
        a_p=trace,
        traces=traces,
    )


def a_p(arrangement: Arrangement, p: int, h11: int, **options) -> int:
    """a_p = 1 + p^3 + h11 (p + p^2) - #X(F_p); options as for count_record."""
    return count_record(arrangement, p, h11, **options).a_p


def lseries(
    arrangement: Arrangement,
    primes: Iterable[int],
    invariants: InvariantSet,
    incidence: Optional[IncidenceData] = None,
    threads: int = 1,
    chunks: Optional[int] = None,
) -> List[CountRecord]:
    """
    One CountRecord per prime, in the given order.

    Raises:
        BadPrimeError: If any listed prime is bad
    """
    incidence = incidence or classify(arrangement)
    primes = list(primes)
    bad = [p for p in primes if not good_prime(arrangement, p, incidence).good]
    if bad:
        raise BadPrimeError(f"Bad primes for {arrangement.name}: {bad}")
    return [
        count_record(arrangement, p, invariants.h11, invariants.h12, incidence, threads, chunks)
        for p in primes
    ]
