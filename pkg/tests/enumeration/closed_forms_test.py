"""
    Tests for the coefficient families, product formulas and count_holey.
"""
from fractions import Fraction

import pytest
from faker import Faker

from src.enumeration.closed_forms import (
    CoefficientFamily,
    coefficient,
    count_holey,
    count_plain,
    count_st,
    count_t,
    count_tc,
)
from src.lattice.oracle import count_tilings_dp
from src.lattice.regions import realize_cells, validate_region
from src.models.exceptions import DomainError, InvalidParams
from src.models.validators import Family, RegionSpec

fake = Faker()
Faker.seed(1729)


def spec(family, n, b, k=0, c=None):
    return validate_region(RegionSpec(family=family, n=n, b=b, k=k, c=c))


class TestCoefficients:
    """
    Spot values and domain checks of the coefficient families.
    """

    def test_diagonal_of_a_is_one(self):
        for _ in range(10):
            n = fake.random_int(min=1, max=12)
            i = fake.random_int(min=1, max=12)
            assert coefficient(CoefficientFamily.A, n, i, i) == 1

    def test_a_and_c_are_triangular(self):
        assert coefficient(CoefficientFamily.A, 3, 1, 2) == 0
        assert coefficient(CoefficientFamily.C, 3, 2, 1) == 0

    def test_small_even_values(self):
        assert coefficient(CoefficientFamily.B, 2, 1, k=2) == Fraction(1, 10)
        assert coefficient(CoefficientFamily.D, 2, 1, k=2) == 1
        assert coefficient(CoefficientFamily.E, 2, 1, k=2) == 1
        assert coefficient(CoefficientFamily.B_PRIME, 2, 1, k=2) == Fraction(1, 2)
        assert coefficient(CoefficientFamily.D_PRIME, 2, 1, k=2) == 1
        assert coefficient(CoefficientFamily.B, 2, 1, k=0) == Fraction(3, 10)

    def test_small_odd_values(self):
        assert coefficient(CoefficientFamily.D_STAR, 2, 1) == 4
        assert coefficient(CoefficientFamily.D_STAR, 2, 2) == 2
        assert coefficient(CoefficientFamily.E_STAR, 2, 1, k=1) == 1
        assert coefficient(CoefficientFamily.E_STAR, 2, 2, k=1) == Fraction(-1, 2)
        assert coefficient(CoefficientFamily.B_STAR, 2, 1, k=1) == Fraction(1, 10)
        assert coefficient(CoefficientFamily.P_STAR, 2, 2, k=1) == Fraction(-1, 5)
        assert coefficient(CoefficientFamily.P_STAR, 1, 2, k=0) == Fraction(-1, 2)

    def test_empty_p_star(self):
        assert coefficient(CoefficientFamily.P_STAR, 4, 1, k=1) == 0

    def test_parity_mismatch(self):
        with pytest.raises(DomainError):
            coefficient(CoefficientFamily.B, 3, 1, k=2)
        with pytest.raises(DomainError):
            coefficient(CoefficientFamily.E_STAR, 4, 1, k=2)

    def test_missing_k(self):
        with pytest.raises(DomainError):
            coefficient(CoefficientFamily.D, 4, 1)

    def test_index_below_one(self):
        with pytest.raises(DomainError):
            coefficient(CoefficientFamily.A, 4, 0, 1)

    def test_domain_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            coefficient(CoefficientFamily.D_PRIME, 5, 1, k=2)


class TestProductFormulas:
    """
    The classical product formulas on known values.
    """

    @pytest.mark.parametrize(
        "sides, expected",
        [((1, 1, 1), 2), ((2, 2, 2), 20), ((3, 2, 3), 175), ((3, 3, 3), 980), ((1, 1, 5), 6)],
    )
    def test_boxed_plane_partitions(self, sides, expected):
        assert count_t(*sides) == expected

    @pytest.mark.parametrize("a, b, expected", [(2, 2, 10), (3, 2, 35), (3, 4, 294), (2, 4, 35), (2, 3, 20)])
    def test_symmetric(self, a, b, expected):
        assert count_st(a, b) == expected

    @pytest.mark.parametrize("a, b, expected", [(2, 2, 2), (3, 2, 5), (4, 2, 14)])
    def test_transpose_complementary(self, a, b, expected):
        assert count_tc(a, b) == expected

    def test_t_is_symmetric_in_its_sides(self):
        for _ in range(5):
            a, b, c = (fake.random_int(min=1, max=5) for _ in range(3))
            assert count_t(a, b, c) == count_t(c, a, b) == count_t(b, c, a)

    def test_dispatch(self):
        assert count_plain("T", 2, 2, 2) == 20
        assert count_plain("ST", 2, 2) == 10
        assert count_plain("TC", 3, 2) == 5

    def test_bad_arguments(self):
        with pytest.raises(InvalidParams):
            count_plain("Q", 2, 2)
        with pytest.raises(InvalidParams):
            count_plain("T", 2, 2)
        with pytest.raises(InvalidParams):
            count_tc(3, 3)


class TestCountHoley:
    """
    count_holey against hand-checked values and the transfer DP.
    """

    @pytest.mark.parametrize(
        "family, n, b, k, expected",
        [
            (Family.VERTICAL, 2, 2, 2, 1),
            (Family.VERTICAL, 2, 2, 0, 3),
            (Family.VERTICAL, 2, 3, 1, 4),
            (Family.VERTICAL, 2, 1, 1, 0),
            (Family.VERTICAL, 3, 1, 0, 0),
            (Family.VERTICAL, 1, 3, 0, 2),
            (Family.LOWER, 2, 2, 2, 1),
            (Family.LOWER, 3, 3, 2, 1),
            (Family.UPPER, 2, 2, 2, 1),
            (Family.UPPER, 3, 1, 2, 2),
            (Family.UPPER, 3, 3, 2, 12),
            (Family.HOLEY, 3, 1, 2, 0),
            (Family.HOLEY, 2, 2, 2, 1),
            (Family.HOLEY, 3, 3, 2, 12),
        ],
    )
    def test_known_values(self, family, n, b, k, expected):
        assert count_holey(spec(family, n, b, k)) == expected

    def test_plain_family(self):
        assert count_holey(spec(Family.PLAIN, 3, 2, c=3)) == 175

    def test_halves_multiply_to_the_hexagon(self):
        for n, b, k in [(4, 4, 2), (5, 3, 2), (4, 2, 4), (6, 4, 4), (7, 5, 4)]:
            lower = count_holey(spec(Family.LOWER, n, b, k))
            upper = count_holey(spec(Family.UPPER, n, b, k))
            assert lower * upper == count_holey(spec(Family.HOLEY, n, b, k))

    def test_agrees_with_transfer_dp(self):
        for family in (Family.VERTICAL, Family.LOWER, Family.UPPER, Family.HOLEY):
            for n in range(1, 7):
                for b in range(1, 8):
                    lowest = 0 if family is Family.VERTICAL else 2
                    for k in range(lowest, n + 1):
                        if (n - k + b) % 2:
                            continue
                        region = spec(family, n, b, k)
                        assert count_holey(region) == count_tilings_dp(realize_cells(region), max_frontier=64)

    def test_requires_validated_region(self):
        with pytest.raises(InvalidParams):
            count_holey(RegionSpec(family=Family.HOLEY, n=4, b=4, k=2))
