"""Prime fields, quadratic characters and small prime utilities."""
from dataclasses import dataclass
from functools import lru_cache
import random
from typing import List

import numpy as np
from sympy import isprime, nextprime, prevprime, primerange


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def prime_range(start: int, stop: int) -> List[int]:
    """Primes p with start <= p <= stop."""
    return [int(p) for p in primerange(start, stop + 1)]


def random_prime(low: int, high: int, rng: random.Random) -> int:
    """
    Draw a prime from [low, high) reproducibly with the given generator.

    The draw is the first prime at or after a uniform start, or the last
    prime below high when there is none.
    """
    p = int(nextprime(rng.randrange(low, high) - 1))
    if p >= high:
        p = int(prevprime(high))
    if p < low:
        raise ValueError(f"No prime in [{low}, {high})")
    return p


@dataclass(frozen=True)
class FpElem:
    """An element of the prime field F_p, p odd."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 3 or self.modulus % 2 == 0:
            raise ValueError(f"Modulus must be an odd prime, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.modulus != self.modulus:
                raise ValueError("Cannot combine elements of different prime fields")
            return other.residue
        return int(other)

    def __add__(self, other) -> "FpElem":
        return FpElem(self.residue + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other) -> "FpElem":
        return FpElem(self.residue - self._coerce(other), self.modulus)

    def __rsub__(self, other) -> "FpElem":
        return FpElem(self._coerce(other) - self.residue, self.modulus)

    def __mul__(self, other) -> "FpElem":
        return FpElem(self.residue * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "FpElem":
        return FpElem(-self.residue, self.modulus)

    def __pow__(self, exponent: int) -> "FpElem":
        return FpElem(pow(self.residue, exponent, self.modulus), self.modulus)

    def inverse(self) -> "FpElem":
        if self.residue == 0:
            raise ZeroDivisionError("Zero has no inverse in F_p")
        return FpElem(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other) -> "FpElem":
        return self * FpElem(self._coerce(other), self.modulus).inverse()

    def __int__(self) -> int:
        return self.residue

    def legendre(self) -> int:
        return legendre(self)


def legendre(a: FpElem) -> int:
    """
    Quadratic character of a field element via Euler's criterion.

    Returns:
        0 if a = 0, +1 if a is a nonzero square, -1 otherwise
    """
    if a.residue == 0:
        return 0
    value = pow(a.residue, (a.modulus - 1) // 2, a.modulus)
    return 1 if value == 1 else -1


@lru_cache(maxsize=64)
def legendre_table(p: int) -> np.ndarray:
    """Read-only int8 array t with t[x] = legendre(x mod p) for 0 <= x < p."""
    table = np.full(p, -1, dtype=np.int8)
    squares = (np.arange(1, p, dtype=np.int64) ** 2) % p
    table[squares] = 1
    table[0] = 0
    table.setflags(write=False)
    return table
