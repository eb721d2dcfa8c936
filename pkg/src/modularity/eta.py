"""Eta quotients and their q-expansions."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Set

from src.errors import OcticError
from src.exact.series import IntSeries, euler_product
from src.modularity.newforms import NEWFORMS, TABLE_PRIMES

DEFAULT_PRECISION = 80


@dataclass(frozen=True)
class EtaQuotient:
    """prod_m eta(m tau)^(e_m)."""

    exponents: Dict[int, int]

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(self.exponents.values()), 2)

    @property
    def shift(self) -> Fraction:
        return Fraction(sum(m * e for m, e in self.exponents.items()), 24)


def eta_qexp(quotient: EtaQuotient, precision: int = DEFAULT_PRECISION) -> IntSeries:
    """
    q-expansion q^s prod_m prod_n (1 - q^(mn))^(e_m) up to O(q^precision).

    Raises:
        OcticError: If the weight or the shift is not integral, or precision < 2
    """
    if precision < 2:
        raise OcticError(f"Precision must be at least 2, got {precision}")
    if quotient.weight.denominator != 1 or quotient.shift.denominator != 1:
        raise OcticError(
            f"Eta quotient {quotient.exponents} has weight {quotient.weight}, shift {quotient.shift}"
        )
    if quotient.shift < 0:
        raise OcticError(f"Eta quotient {quotient.exponents} has negative order at infinity")
    base = euler_product(precision)
    series = IntSeries.one(precision)
    for m, e in sorted(quotient.exponents.items()):
        series = series * base.dilate(m) ** e
    return series.shift(int(quotient.shift))


def prime_coefficients(series: IntSeries, primes=TABLE_PRIMES) -> Dict[int, int]:
    return {p: series[p] for p in primes if p < series.precision}


def verify_eta_candidates(precision: int = DEFAULT_PRECISION) -> Dict[str, bool]:
    """Recompute every configured eta quotient and compare it with the table."""
    verdict = {}
    for label, form in NEWFORMS.items():
        if form.eta_exponents is None:
            continue
        coefficients = prime_coefficients(eta_qexp(EtaQuotient(form.eta_exponents), precision))
        verdict[label] = coefficients == form.ap_table
    return verdict


def validated_labels(precision: int = DEFAULT_PRECISION) -> Set[str]:
    return {label for label, ok in verify_eta_candidates(precision).items() if ok}
