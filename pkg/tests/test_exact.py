"""Unit tests for rationals, prime fields, exact linear algebra and series."""
from fractions import Fraction
import random

import pytest

from src.errors import DimensionMismatchError, ParseError, PrecisionMismatchError
from src.exact.fields import FpElem, is_prime, legendre, legendre_table, prime_range, random_prime
from src.exact.linalg import (
    RationalMatrix, Subspace, fraction_free_rank, rank_mod_p, rref, subspace_intersect, subspace_sum,
    to_residues
)
from src.exact.rational import (
    format_rational, is_squarefree, parse_rational, primitive_integer_vector, squarefree_part
)
from src.exact.series import IntSeries, euler_product, series_mul


def _unit(i: int, n: int):
    return [1 if j == i else 0 for j in range(n)]


def _random_rows(rng: random.Random, count: int, n: int):
    return [[rng.randint(-3, 3) for _ in range(n)] for _ in range(count)]


class TestRationals:
    """Test parsing and normalization of rationals."""

    def test_parse_reduces(self):
        assert parse_rational("3/6") == Fraction(1, 2)
        assert parse_rational("-4") == Fraction(-4)
        assert parse_rational(7) == Fraction(7)

    def test_parse_rejects_malformed(self):
        for bad in ("1.5", "1e3", "a/b", "1/-2", "", "3/"):
            with pytest.raises(ParseError):
                parse_rational(bad)

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="Zero denominator"):
            parse_rational("1/0")

    def test_format_drops_unit_denominator(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 6)) == "-1/2"

    def test_exact_round_trip_on_big_inputs(self):
        rng = random.Random(7)
        for _ in range(50):
            a = Fraction(rng.randint(-10 ** 30, 10 ** 30), rng.randint(1, 10 ** 20))
            c = Fraction(rng.randint(-10 ** 30, 10 ** 30), rng.randint(1, 10 ** 20))
            assert (a + c) - c == a
            assert parse_rational(format_rational(a)) == a

    def test_primitive_integer_vector(self):
        values = [Fraction(1, 2), Fraction(-1, 3), 0, 1]
        assert primitive_integer_vector(values) == (3, -2, 0, 6)
        assert primitive_integer_vector([-2, 4, 0, 0]) == (1, -2, 0, 0)

    def test_primitive_of_zero_vector(self):
        with pytest.raises(ValueError):
            primitive_integer_vector([0, 0, 0, 0])

    def test_squarefree_part(self):
        assert squarefree_part(-12) == -3
        assert squarefree_part(18) == 2
        assert squarefree_part(1) == 1
        assert is_squarefree(6)
        assert is_squarefree(-2)
        assert not is_squarefree(4)
        assert not is_squarefree(0)

    def test_squarefree_part_with_large_square(self):
        q = 1_000_003
        assert squarefree_part(-15 * q * q) == -15


class TestPrimeFields:
    """Test F_p arithmetic and the quadratic character."""

    def test_is_prime(self):
        assert prime_range(1, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert not is_prime(1)
        assert is_prime(73)

    def test_legendre_examples(self):
        assert legendre(FpElem(0, 7)) == 0
        assert legendre(FpElem(4, 5)) == 1
        assert legendre(FpElem(2, 5)) == -1

    def test_legendre_table_matches_euler_criterion(self):
        for p in (3, 5, 7, 11, 73):
            table = legendre_table(p)
            assert [int(v) for v in table] == [legendre(FpElem(a, p)) for a in range(p)]

    def test_legendre_table_is_read_only(self):
        with pytest.raises(ValueError):
            legendre_table(7)[1] = 0

    def test_multiplicativity(self):
        for p in prime_range(3, 97):
            table = legendre_table(p)
            for a in range(1, p):
                for b in range(1, p):
                    assert table[a] * table[b] == table[a * b % p]

    def test_field_operations(self):
        a = FpElem(3, 7)
        assert int(a + 5) == 1
        assert int(a * a) == 2
        assert int(a / 3) == 1
        assert int(a.inverse() * a) == 1
        assert int(-a) == 4

    def test_even_modulus_rejected(self):
        with pytest.raises(ValueError):
            FpElem(1, 4)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            FpElem(0, 5).inverse()

    def test_random_prime_is_deterministic(self):
        draws = [random_prime(1 << 25, 1 << 26, random.Random(11)) for _ in range(2)]
        assert draws[0] == draws[1]
        assert is_prime(draws[0])
        assert (1 << 25) <= draws[0] < (1 << 26)

    def test_random_prime_at_full_width(self):
        p = random_prime(1 << 61, 1 << 62, random.Random(4))
        assert (1 << 61) <= p < (1 << 62)
        assert is_prime(p)

    def test_random_prime_empty_interval(self):
        with pytest.raises(ValueError):
            random_prime(24, 29, random.Random(0))


class TestRref:
    """Test row reduction and ranks."""

    def test_identity(self):
        identity = RationalMatrix.identity(3)
        reduced, rank = rref(identity)
        assert reduced == identity
        assert rank == 3

    def test_dependent_rows(self):
        reduced, rank = rref(RationalMatrix.from_rows([[1, 2], [2, 4]]))
        assert reduced.rows == ((1, 2), (0, 0))
        assert rank == 1

    def test_idempotent(self):
        matrix = RationalMatrix.from_rows(_random_rows(random.Random(3), 6, 9))
        once, _ = matrix.rref()
        twice, _ = once.rref()
        assert once == twice

    def test_rank_matches_fraction_free_oracle(self):
        rng = random.Random(5)
        for count, n in ((4, 7), (10, 6), (16, 30)):
            rows = _random_rows(rng, count, n)
            # force a dependency
            rows.append([a + 2 * b for a, b in zip(rows[0], rows[1])])
            assert RationalMatrix.from_rows(rows).rank() == fraction_free_rank(rows)

    def test_rank_mod_p_agrees_for_large_prime(self):
        rows = _random_rows(random.Random(9), 8, 12)
        p = random_prime(1 << 25, 1 << 26, random.Random(1))
        assert rank_mod_p(to_residues(rows, p), p) == RationalMatrix.from_rows(rows).rank()

    def test_rank_mod_p_with_62_bit_prime(self):
        rows = _random_rows(random.Random(9), 8, 12)
        rows.append([a - 3 * b for a, b in zip(rows[2], rows[5])])
        p = random_prime(1 << 61, 1 << 62, random.Random(2))
        residues = to_residues(rows, p)
        assert residues.dtype == object
        assert rank_mod_p(residues, p) == RationalMatrix.from_rows(rows).rank()

    def test_nullspace(self):
        matrix = RationalMatrix.from_rows([[1, 1, 0, 0], [0, 0, 1, 1]])
        kernel = matrix.nullspace()
        assert kernel.nrows == 2
        assert matrix.mul_transpose(kernel).is_zero()

    def test_left_nullspace(self):
        matrix = RationalMatrix.from_rows([[1, 2], [2, 4], [0, 1]])
        left = matrix.left_nullspace()
        assert left.nrows == 1
        assert matrix.combine(left).is_zero()

    def test_unequal_rows(self):
        with pytest.raises(DimensionMismatchError):
            RationalMatrix.from_rows([[1, 2], [3]])


class TestSubspaces:
    """Test sums and intersections in both representations."""

    def test_sum_of_lines(self):
        a = Subspace.from_basis([_unit(0, 5)], 5)
        b = Subspace.from_basis([_unit(1, 5)], 5)
        assert subspace_sum(a, b).dim == 2

    def test_sum_is_idempotent(self):
        v = Subspace.from_basis([[1, 2, 0, 1], [0, 1, 1, 1]], 4)
        assert subspace_sum(v, v) == v

    def test_intersection_of_planes(self):
        a = Subspace.from_basis([_unit(0, 4), _unit(1, 4)], 4)
        b = Subspace.from_basis([_unit(1, 4), _unit(2, 4)], 4)
        assert subspace_intersect(a, b) == Subspace.from_basis([_unit(1, 4)], 4)

    def test_intersection_with_ambient(self):
        v = Subspace.from_basis([[1, 2, 0, 1], [0, 1, 1, 1]], 4)
        assert subspace_intersect(v, Subspace.full(4)) == v

    def test_conditions_and_spanning_agree(self):
        spanned = Subspace.from_basis([[1, -1, 0, 0], [0, 0, 1, -1]], 4)
        cut = Subspace.from_conditions([[1, 1, 0, 0], [0, 0, 1, 1]], 4)
        assert spanned == cut
        assert cut.dim == 2
        assert cut.contains(spanned)

    def test_dimension_formula_on_random_subspaces(self):
        rng = random.Random(2024)
        n = 24
        for trial in range(12):
            da, db = rng.randint(1, 10), rng.randint(1, 10)
            a = Subspace.from_basis(_random_rows(rng, da, n), n)
            b_rows = _random_rows(rng, db, n)
            # alternate representations to exercise every code path
            if trial % 2:
                b = Subspace.from_conditions(b_rows, n)
            else:
                b = Subspace.from_basis(b_rows, n)
            total = subspace_sum(a, b)
            meet = subspace_intersect(a, b)
            assert total.dim + meet.dim == a.dim + b.dim
            assert a.contains(meet) and b.contains(meet)
            assert total.contains(a) and total.contains(b)

    def test_shared_piece_survives_intersection(self):
        rng = random.Random(8)
        n = 20
        common = _random_rows(rng, 3, n)
        a = Subspace.from_basis(common + _random_rows(rng, 4, n), n)
        b = Subspace.from_basis(common + _random_rows(rng, 4, n), n)
        assert subspace_intersect(a, b).contains(Subspace.from_basis(common, n))

    def test_ambient_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            subspace_sum(Subspace.full(3), Subspace.full(4))


class TestSeries:
    """Test truncated integer power series."""

    def test_difference_of_squares(self):
        a = IntSeries.from_coefficients([1, 1], 3)
        b = IntSeries.from_coefficients([1, -1], 3)
        assert series_mul(a, b).coefficients == (1, 0, -1)

    def test_identity(self):
        a = IntSeries.from_coefficients([3, -1, 4, 1, 5], 5)
        assert a * IntSeries.one(5) == a

    def test_telescoping(self):
        geometric = IntSeries.from_coefficients([1] * 10, 10)
        assert geometric * IntSeries.from_coefficients([1, -1], 10) == IntSeries.one(10)

    def test_inverse_and_negative_power(self):
        a = IntSeries.from_coefficients([1, -1], 10)
        assert a.inverse() == IntSeries.from_coefficients([1] * 10, 10)
        assert a ** -2 * a ** 2 == IntSeries.one(10)

    def test_dilate_and_shift(self):
        a = IntSeries.from_coefficients([1, 2, 3], 6)
        assert a.dilate(2).coefficients == (1, 0, 2, 0, 3, 0)
        assert a.shift(2).coefficients == (0, 0, 1, 2, 3, 0)

    def test_precision_mismatch(self):
        with pytest.raises(PrecisionMismatchError):
            IntSeries.one(3) * IntSeries.one(4)

    def test_pentagonal_numbers(self):
        assert euler_product(13).coefficients == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)

    def test_euler_product_against_direct_product(self):
        n = 30
        direct = IntSeries.one(n)
        for k in range(1, n):
            factor = [0] * n
            factor[0], factor[k] = 1, -1
            direct = direct * IntSeries(tuple(factor))
        assert euler_product(n) == direct
