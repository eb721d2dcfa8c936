"""Unit tests for the closed-form invariants and Hodge numbers."""
import random

import pytest

from src.arrangement import classify, parse, validate
from src.errors import DegreeError, InconsistentInvariantsError, OcticError
from src.invariants import (
    betti_numbers, compute_invariants, euler, h2_omega1_Y, hodge, hodge_diamond, picard_rank_Y
)
from src.invariants.hodge import PLANE_DEGREES

EIGHT_PLANES = PLANE_DEGREES


class TestEuler:
    """Test the Euler characteristic formula."""

    def test_generic_planes(self):
        assert euler(EIGHT_PLANES) == 40

    def test_arrangement_2(self):
        assert euler(EIGHT_PLANES, p4_0=1, p4_1=4, p5_2=4, l3=4) == 140

    def test_arrangement_1(self):
        assert euler(EIGHT_PLANES, p4_1=4, p5_2=4, l3=4) == 136

    def test_degrees_must_sum_to_eight(self):
        with pytest.raises(DegreeError):
            euler((1,) * 7)

    def test_negative_counter(self):
        with pytest.raises(OcticError):
            euler(EIGHT_PLANES, p4_0=-1)

    def test_non_plane_components(self):
        # a smooth octic has e = -296 as a double cover branched along it
        assert euler((8,)) == 8 - (512 - 256 + 48)

    def test_even_for_random_admissible_arrangements(self):
        rng = random.Random(8)
        seen = 0
        while seen < 30:
            planes = [[rng.choice((-1, 0, 1)) for _ in range(4)] for _ in range(8)]
            if any(not any(plane) for plane in planes):
                continue
            try:
                incidence = classify(parse({"name": "random", "planes": planes}))
            except OcticError:
                continue
            if not validate(incidence).admissible:
                continue
            c = incidence.counters
            e = euler(EIGHT_PLANES, p4_0=c.p4_0, p4_1=c.p4_1, p5_0=c.p5_0, p5_1=c.p5_1,
                      p5_2=c.p5_2, l3=c.l3)
            assert e % 2 == 0, c
            seen += 1


class TestPicardRank:
    """Test the Picard rank of the blown-up double cover."""

    def test_arrangement_2(self):
        assert picard_rank_Y(8, p4_0=1, p4_1=4, p5_2=4, l3=4) == 70

    def test_arrangement_85(self):
        assert picard_rank_Y(8, p4_0=12) == 41

    def test_generic(self):
        assert picard_rank_Y(8) == 29


class TestH2Omega1:
    """Test h^2(Omega^1_Y)."""

    def test_eight_planes(self):
        assert h2_omega1_Y(EIGHT_PLANES) == 0

    def test_two_quartics(self):
        assert h2_omega1_Y((4, 4), r=2) == 33

    def test_single_octic(self):
        assert h2_omega1_Y((8,), r=1) == 0


class TestHodge:
    """Test h11 and the skew-symmetric Picard rank."""

    @pytest.mark.parametrize("e, h12, rho, expected", [
        (140, 0, 70, (70, 0)),
        (80, 0, 39, (40, 1)),
        (88, 0, 41, (44, 3)),
        (40, 9, 29, (29, 0)),
    ])
    def test_examples(self, e, h12, rho, expected):
        assert hodge(e, h12, rho) == expected

    def test_odd_euler_characteristic(self):
        with pytest.raises(InconsistentInvariantsError):
            hodge(141, 0, 70)

    def test_negative_skew_rank(self):
        with pytest.raises(InconsistentInvariantsError):
            hodge(80, 0, 41)

    def test_diamond(self):
        diamond = hodge_diamond(70, 0)
        assert diamond[1][1] == diamond[2][2] == 70
        assert diamond[0][0] == diamond[3][3] == diamond[3][0] == diamond[0][3] == 1
        assert diamond[1][2] == diamond[2][1] == 0
        assert diamond[0][1] == 0

    def test_betti_numbers_give_euler_characteristic(self):
        betti = betti_numbers(29, 9)
        assert sum((-1) ** i * b for i, b in enumerate(betti)) == 40


class TestComputeInvariants:
    """Test assembling the invariant set from an incidence lattice."""

    def test_arrangement_2(self, incidence_2):
        invariants = compute_invariants(incidence_2, equisingular=0)
        assert (invariants.e, invariants.rho_Y, invariants.h11, invariants.h12) == (140, 70, 70, 0)
        assert invariants.skew_rank == 0

    def test_deformations_raise_h11(self, incidence_2):
        invariants = compute_invariants(incidence_2, equisingular=2)
        assert invariants.h11 == 72
        assert invariants.skew_rank == 2

    def test_json_integers_are_strings(self, incidence_2):
        dumped = compute_invariants(incidence_2, equisingular=0).model_dump(mode="json")
        assert dumped["e"] == "140"
        assert dumped["counters"]["p5_2"] == "4"
