"""Truncated power series with integer coefficients."""
from dataclasses import dataclass
from typing import Iterable, Tuple

from src.errors import PrecisionMismatchError


@dataclass(frozen=True)
class IntSeries:
    """
    c_0 + c_1 q + ... + c_{N-1} q^{N-1} + O(q^N).

    Every operation truncates at the precision N and never reads past it.
    """

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("Precision must be positive")

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], precision: int) -> "IntSeries":
        coeffs = [int(c) for c in coefficients][:precision]
        coeffs += [0] * (precision - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, precision: int) -> "IntSeries":
        return cls.from_coefficients([1], precision)

    @property
    def precision(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def _check(self, other: "IntSeries") -> None:
        if other.precision != self.precision:
            raise PrecisionMismatchError(
                f"Precision mismatch: {self.precision} vs {other.precision}"
            )

    def __add__(self, other: "IntSeries") -> "IntSeries":
        self._check(other)
        return IntSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "IntSeries":
        return IntSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        return self + (-other)

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        return series_mul(self, other)

    def inverse(self) -> "IntSeries":
        """Multiplicative inverse; the constant term must be a unit (±1)."""
        lead = self.coefficients[0]
        if lead not in (1, -1):
            raise ValueError("Series inverse needs constant term ±1")
        n = self.precision
        inv = [0] * n
        inv[0] = lead
        for k in range(1, n):
            acc = sum(self.coefficients[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -lead * acc
        return IntSeries(tuple(inv))

    def __pow__(self, exponent: int) -> "IntSeries":
        base = self if exponent >= 0 else self.inverse()
        result = IntSeries.one(self.precision)
        exponent = abs(exponent)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def dilate(self, m: int) -> "IntSeries":
        """Substitute q -> q^m."""
        coeffs = [0] * self.precision
        for n in range(0, (self.precision - 1) // m + 1):
            coeffs[n * m] = self.coefficients[n]
        return IntSeries(tuple(coeffs))

    def shift(self, k: int) -> "IntSeries":
        """Multiply by q^k."""
        return IntSeries.from_coefficients([0] * k + list(self.coefficients), self.precision)


def series_mul(a: IntSeries, b: IntSeries) -> IntSeries:
    """Cauchy product truncated to the common precision."""
    a._check(b)
    n = a.precision
    out = [0] * n
    for i, ai in enumerate(a.coefficients):
        if ai == 0:
            continue
        for j in range(n - i):
            bj = b.coefficients[j]
            if bj:
                out[i + j] += ai * bj
    return IntSeries(tuple(out))


def euler_product(precision: int) -> IntSeries:
    """
    prod_{n>=1} (1 - q^n) via the pentagonal number theorem:
    sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
    """
    coeffs = [0] * precision
    k = 0
    while True:
        exponents = {k * (3 * k - 1) // 2, k * (3 * k + 1) // 2}
        if min(exponents) >= precision:
            break
        sign = -1 if k % 2 else 1
        for e in exponents:
            if e < precision:
                coeffs[e] = sign
        k += 1
    return IntSeries(tuple(coeffs))
