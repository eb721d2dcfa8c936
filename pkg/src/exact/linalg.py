"""Exact linear algebra over Q plus modular elimination helpers.

Exact work is delegated to sympy's DomainMatrix over QQ. A numpy elimination
modulo large primes serves as the fast path for large rank computations.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.errors import DimensionMismatchError

MODULAR_PRIME_BITS = 62

# residues of primes up to this size fit int64: products stay below 2**52 and
# sums of a few hundred of them below 2**63. Larger primes use Python ints.
WORD_PRIME_BITS = 26


def residue_dtype(p: int):
    return np.int64 if p.bit_length() <= WORD_PRIME_BITS else object


def _to_qq(value) -> object:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix with Fraction entries."""

    rows: Tuple[Tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], ncols: Optional[int] = None) -> "RationalMatrix":
        converted = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if ncols is None:
            if not converted:
                raise ValueError("Column count required for an empty matrix")
            ncols = len(converted[0])
        if any(len(row) != ncols for row in converted):
            raise DimensionMismatchError("Rows of unequal length")
        return cls(converted, ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows(([1 if i == j else 0 for j in range(n)] for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([[_to_qq(v) for v in row] for row in self.rows], self.shape, QQ)

    @classmethod
    def from_domain(cls, matrix: DomainMatrix) -> "RationalMatrix":
        nrows, ncols = matrix.shape
        if nrows == 0:
            return cls((), ncols)
        return cls(tuple(tuple(_from_qq(v) for v in row) for row in matrix.to_list()), ncols)

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        if other.ncols != self.ncols:
            raise DimensionMismatchError(f"Cannot stack {self.ncols} and {other.ncols} columns")
        return RationalMatrix(self.rows + other.rows, self.ncols)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            tuple(tuple(row[j] for row in self.rows) for j in range(self.ncols)), self.nrows
        )

    def mul_transpose(self, other: "RationalMatrix") -> "RationalMatrix":
        """Return self @ other.T."""
        if other.ncols != self.ncols:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}^T")
        if self.nrows == 0 or other.nrows == 0:
            return RationalMatrix(tuple(() for _ in self.rows), other.nrows)
        product = self.to_domain().matmul(other.to_domain().transpose())
        return RationalMatrix.from_domain(product)

    def combine(self, coefficients: "RationalMatrix") -> "RationalMatrix":
        """Return coefficients @ self (rows are combinations of self's rows)."""
        if coefficients.ncols != self.nrows:
            raise DimensionMismatchError("Coefficient count does not match row count")
        if coefficients.nrows == 0:
            return RationalMatrix((), self.ncols)
        return RationalMatrix.from_domain(coefficients.to_domain().matmul(self.to_domain()))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def rref(self) -> Tuple["RationalMatrix", int]:
        """
        Reduced row-echelon form, keeping the shape.

        Returns:
            Tuple of (reduced matrix, rank)
        """
        reduced, pivots = self._rref_with_pivots()
        return reduced, len(pivots)

    def _rref_with_pivots(self) -> Tuple["RationalMatrix", Tuple[int, ...]]:
        if self.nrows == 0 or self.ncols == 0:
            return self, ()
        reduced, pivots = self.to_domain().rref()
        return RationalMatrix.from_domain(reduced), tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def row_basis(self) -> "RationalMatrix":
        """The nonzero rows of the rref: the canonical basis of the row space."""
        reduced, rank = self.rref()
        return RationalMatrix(reduced.rows[:rank], self.ncols)

    def nullspace(self) -> "RationalMatrix":
        """Rows spanning {v : self @ v = 0}, one per free column."""
        reduced, pivots = self._rref_with_pivots()
        pivot_set = set(pivots)
        basis: List[Tuple[Fraction, ...]] = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vector = [Fraction(0)] * self.ncols
            vector[free] = Fraction(1)
            for r, col in enumerate(pivots):
                vector[col] = -reduced.rows[r][free]
            basis.append(tuple(vector))
        return RationalMatrix(tuple(basis), self.ncols)

    def left_nullspace(self) -> "RationalMatrix":
        """Rows c with c @ self = 0."""
        if self.ncols == 0:
            return RationalMatrix.identity(self.nrows)
        return self.transpose().nullspace()


def rref(matrix: RationalMatrix) -> Tuple[RationalMatrix, int]:
    return matrix.rref()


def fraction_free_rank(rows: Sequence[Sequence]) -> int:
    """
    Rank by Bareiss fraction-free elimination on integers.

    Independent of sympy's elimination; used as a cross-check oracle.
    """
    matrix: List[List[int]] = []
    for row in rows:
        fracs = [Fraction(v) for v in row]
        common = lcm(*(v.denominator for v in fracs)) if fracs else 1
        matrix.append([int(v * common) for v in fracs])
    if not matrix:
        return 0
    nrows, ncols = len(matrix), len(matrix[0])
    rank = 0
    previous = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        for r in range(rank + 1, nrows):
            factor = matrix[r][col]
            matrix[r] = [
                (lead * matrix[r][c] - factor * matrix[rank][c]) // previous
                for c in range(ncols)
            ]
        previous = lead
        rank += 1
        if rank == nrows:
            break
    return rank


# ----------------------------------------------------------------------------
# Modular elimination
# ----------------------------------------------------------------------------

def to_residues(rows: Sequence[Sequence], p: int, ncols: Optional[int] = None) -> np.ndarray:
    """Reduce a rational matrix modulo p into an array of residue_dtype(p)."""
    data = []
    for row in rows:
        reduced = []
        for v in row:
            v = Fraction(v)
            reduced.append(v.numerator * pow(v.denominator, -1, p) % p)
        data.append(reduced)
    if not data:
        return np.zeros((0, ncols or 0), dtype=residue_dtype(p))
    return np.array(data, dtype=residue_dtype(p))


def echelon_mod_p(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """
    Reduced row-echelon form modulo p.

    Pivots are the first nonzero entry in column order.

    Returns:
        Tuple of (nonzero reduced rows, pivot columns)
    """
    a = np.array(matrix, dtype=residue_dtype(p)) % p
    nrows, ncols = a.shape
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        candidates = np.nonzero(a[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = a[rank] * pow(int(a[rank, col]), -1, p) % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, col], a[rank])) % p
        pivots.append(col)
        rank += 1
    return a[:rank], tuple(pivots)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(echelon_mod_p(matrix, p)[1])


def nullspace_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {v : matrix @ v = 0 mod p}."""
    nrows, ncols = matrix.shape
    if nrows == 0:
        return np.eye(ncols, dtype=residue_dtype(p))
    reduced, pivots = echelon_mod_p(matrix, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=residue_dtype(p))
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, col in enumerate(pivots):
            basis[i, col] = (-reduced[r, f]) % p
    return basis


def left_nullspace_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    """Rows c with c @ matrix = 0 mod p."""
    return nullspace_mod_p(matrix.T.copy(), p)


def matmul_mod_p(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"Cannot multiply {a.shape} by {b.shape}")
    return (a @ b) % p


# ----------------------------------------------------------------------------
# Subspaces
# ----------------------------------------------------------------------------

class Subspace:
    """
    A subspace of Q^n, held by a spanning set, by defining linear conditions,
    or both.

    Sums and intersections pick the representation that keeps the matrices
    small: a sum of a subspace given by few conditions and one given by few
    spanning vectors is computed on the conditions side, an intersection on the
    spanning side.
    """

    def __init__(
        self,
        ambient: int,
        spanning: Optional[RationalMatrix] = None,
        conditions: Optional[RationalMatrix] = None,
    ):
        if spanning is None and conditions is None:
            raise ValueError("A subspace needs spanning vectors or conditions")
        for matrix in (spanning, conditions):
            if matrix is not None and matrix.ncols != ambient:
                raise DimensionMismatchError(
                    f"Matrix with {matrix.ncols} columns in ambient dimension {ambient}"
                )
        self.ambient = ambient
        self._spanning = spanning
        self._conditions = conditions

    @classmethod
    def from_basis(cls, rows: Iterable[Sequence], ambient: int) -> "Subspace":
        return cls(ambient, spanning=RationalMatrix.from_rows(rows, ambient))

    @classmethod
    def from_conditions(cls, rows: Iterable[Sequence], ambient: int) -> "Subspace":
        return cls(ambient, conditions=RationalMatrix.from_rows(rows, ambient))

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, conditions=RationalMatrix((), ambient))

    @cached_property
    def basis(self) -> RationalMatrix:
        """Canonical basis: nonzero rows of the rref (equal subspaces agree)."""
        if self._spanning is not None:
            return self._spanning.row_basis()
        return self._conditions.nullspace().row_basis()

    @cached_property
    def annihilator(self) -> RationalMatrix:
        """Canonical basis of the conditions cutting out the subspace."""
        if self._conditions is not None:
            return self._conditions.row_basis()
        return self._spanning.nullspace().row_basis()

    @cached_property
    def dim(self) -> int:
        if self._spanning is not None:
            return self._spanning.rank()
        return self.ambient - self._conditions.rank()

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    def _check(self, other: "Subspace") -> None:
        if other.ambient != self.ambient:
            raise DimensionMismatchError(
                f"Ambient dimensions differ: {self.ambient} vs {other.ambient}"
            )

    def sum(self, other: "Subspace") -> "Subspace":
        """The subspace self + other."""
        self._check(other)
        if self._spanning is not None and other._spanning is not None:
            return Subspace(self.ambient, spanning=self._spanning.stack(other._spanning))
        if self._conditions is not None and other._spanning is not None:
            return _sum_on_conditions(self._conditions, other._spanning, self.ambient)
        if other._conditions is not None and self._spanning is not None:
            return _sum_on_conditions(other._conditions, self._spanning, self.ambient)
        return Subspace(self.ambient, spanning=self.basis.stack(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """The subspace self ∩ other."""
        self._check(other)
        if self._conditions is not None and other._conditions is not None:
            return Subspace(self.ambient, conditions=self._conditions.stack(other._conditions))
        if self._spanning is not None and other._conditions is not None:
            return _intersect_on_spanning(self._spanning, other._conditions, self.ambient)
        if other._spanning is not None and self._conditions is not None:
            return _intersect_on_spanning(other._spanning, self._conditions, self.ambient)
        return Subspace(self.ambient, conditions=self.annihilator.stack(other.annihilator))

    def contains(self, other: "Subspace") -> bool:
        """True if other is a subspace of self."""
        self._check(other)
        vectors = other._spanning if other._spanning is not None else other.basis
        conditions = self._conditions if self._conditions is not None else self.annihilator
        return vectors.mul_transpose(conditions).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def _sum_on_conditions(conditions: RationalMatrix, spanning: RationalMatrix, ambient: int) -> Subspace:
    # Ann(A + B) = {c @ Phi_A : c @ Phi_A @ B^T = 0}
    pairing = conditions.mul_transpose(spanning)
    coefficients = pairing.left_nullspace()
    return Subspace(ambient, conditions=conditions.combine(coefficients))


def _intersect_on_spanning(spanning: RationalMatrix, conditions: RationalMatrix, ambient: int) -> Subspace:
    # A ∩ B = {c @ S_A : c @ S_A @ Phi_B^T = 0}
    pairing = spanning.mul_transpose(conditions)
    coefficients = pairing.left_nullspace()
    return Subspace(ambient, spanning=spanning.combine(coefficients))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)
