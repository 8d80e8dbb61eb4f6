"""
    Tests for hypergeometric evaluation, correlation functions and their limits.
"""
import math
from fractions import Fraction

import mpmath
import pytest
from faker import Faker

from src.analysis.hyperasym import (
    HyperSeries,
    Identity,
    adjudicate,
    asymptote,
    asymptote_table,
    convergence_report,
    correlation_finite,
    correlation_hypergeometric,
    correlation_limit,
    default_identity_samples,
    domination_bound_holds,
    grid_point,
    hyper_2f1_numeric,
    hyper_terminating,
    inversion_sides,
    power_of_two_sides,
    transform_identities_check,
    truncated_sum,
    well_poised_sides,
    whipple_sides,
)
from src.enumeration.closed_forms import count_holey, count_st, count_t, count_tc
from src.lattice.regions import validate_region
from src.linalg.path_matrices import build_lgv_matrix
from src.linalg.skewlin import determinant
from src.models.exceptions import DenominatorPole, InvalidParams, KTooSmall, NonTerminating, OutOfRadius
from src.models.validators import Family, Interaction, RegionSpec

fake = Faker()
Faker.seed(1618)


def even_parameters(max_n=8, max_m=4, lowest_k=2):
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for k in range(lowest_k, n + 1):
                if (n - k) % 2 == 0:
                    yield n, m, k


class TestHyperTerminating:
    """
    Exact evaluation of terminating series.
    """

    def test_two_term_expansion(self):
        b = Fraction(fake.random_int(min=1, max=9), 4)
        c = Fraction(fake.random_int(min=1, max=9), 3)
        z = Fraction(fake.random_int(min=-9, max=9), 5)
        series = HyperSeries(numerator_params=[-1, b], denominator_params=[c], argument=z)
        assert hyper_terminating(series) == 1 - b * z / c

    def test_zero_parameter(self):
        series = HyperSeries(numerator_params=[0, "1/2"], denominator_params=["3/2"], argument=7)
        assert hyper_terminating(series) == 1

    def test_coerces_parameters(self):
        series = HyperSeries(numerator_params=["-2", 0.5], denominator_params=[3], argument="1/3")
        assert series.numerator_params == [Fraction(-2), Fraction(1, 2)]
        assert series.termination_index == 2

    def test_non_terminating(self):
        with pytest.raises(NonTerminating):
            hyper_terminating(HyperSeries(numerator_params=[1, 1], denominator_params=[2], argument="1/2"))

    def test_denominator_pole(self):
        with pytest.raises(DenominatorPole):
            hyper_terminating(HyperSeries(numerator_params=[-3, 1], denominator_params=[-1], argument=1))

    def test_denominator_past_termination_is_harmless(self):
        series = HyperSeries(numerator_params=[-1, 1], denominator_params=[-1], argument=1)
        assert hyper_terminating(series) == 2

    def test_truncated_sum(self):
        series = HyperSeries(numerator_params=[1], denominator_params=[], argument="1/2")
        assert truncated_sum(series, 3) == Fraction(7, 4)
        assert truncated_sum(series, 0) == 0

    def test_chu_vandermonde(self):
        for n in range(0, 6):
            b, c = Fraction(1, 3), Fraction(7, 2)
            series = HyperSeries(numerator_params=[-n, b], denominator_params=[c], argument=1)
            expected = Fraction(1)
            for offset in range(n):
                expected *= (c - b + offset) / (c + offset)
            assert hyper_terminating(series) == expected


class TestHyper2F1Numeric:
    """
    Floating 2F1 inside the unit disc.
    """

    def test_logarithm(self):
        assert hyper_2f1_numeric(1, 1, 2, Fraction(1, 2), tol=1e-13) == pytest.approx(2 * math.log(2), abs=1e-12)

    def test_matches_mpmath(self):
        expected = float(mpmath.hyp2f1(mpmath.mpf(1) / 3, 0.5, 1.5, -0.5))
        assert hyper_2f1_numeric("1/3", "1/2", "3/2", "-1/2", tol=1e-14) == pytest.approx(expected, abs=1e-12)

    def test_terminating_input(self):
        exact = hyper_terminating(HyperSeries(numerator_params=[-3, "1/2"], denominator_params=["5/2"], argument="1/2"))
        assert hyper_2f1_numeric(-3, "1/2", "5/2", "1/2") == pytest.approx(float(exact))

    def test_out_of_radius(self):
        with pytest.raises(OutOfRadius):
            hyper_2f1_numeric(1, 1, 2, 1)
        with pytest.raises(OutOfRadius):
            hyper_2f1_numeric(1, 1, 2, -3)


class TestTransformations:
    """
    Transformation and summation formulas, checked exactly.
    """

    def test_whipple_with_one_term(self):
        left, right = whipple_sides(2, 1, 1, 1, 1, 1)
        assert left == right == Fraction(15, 16)

    def test_whipple_generic(self):
        left, right = whipple_sides("7/3", "1/5", "2/7", "3/4", "5/6", 3)
        assert left == right

    def test_inversion_linear_case(self):
        left, right = inversion_sides(1, "2/3", "5/4", "-7/2")
        assert left == right == 1 - Fraction(2, 3) * Fraction(-7, 2) / Fraction(5, 4)

    def test_inversion_sample(self):
        left, right = inversion_sides(3, "1/2", "5/2", "1/2")
        assert left == right

    def test_well_poised_sample(self):
        left, right = well_poised_sides(3, -2, 1)
        assert left == right == Fraction(5, 3)

    def test_well_poised_either_parameter_terminates(self):
        assert well_poised_sides(Fraction(7, 2), Fraction(1, 3), -2) == well_poised_sides(
            Fraction(7, 2), -2, Fraction(1, 3)
        )

    def test_well_poised_needs_termination(self):
        with pytest.raises(NonTerminating):
            well_poised_sides(3, Fraction(1, 2), Fraction(1, 3))

    def test_power_of_two(self):
        for n in range(1, 8):
            for i in range(1, n + 2):
                left, right = power_of_two_sides(n, i)
                assert left == right == 2**n

    def test_default_samples_all_hold(self):
        report = transform_identities_check()
        assert report["holds"].all()
        counts = report["identity"].value_counts()
        for identity in (Identity.WHIPPLE, Identity.INVERSION, Identity.WELL_POISED):
            assert counts[identity.value] >= 20

    def test_failures_are_reported(self):
        report = transform_identities_check([(Identity.WELL_POISED, (3, Fraction(1, 2), Fraction(1, 3)))])
        assert not report["holds"].any()
        assert report["error"].iloc[0]

    def test_samples_are_reusable(self):
        assert len(default_identity_samples()) == len(transform_identities_check())

    def test_domination_bound(self):
        for k in range(2, 11):
            for xi in (1, Fraction(1, 2), 3):
                assert domination_bound_holds(k, xi)


class TestCorrelationFinite:
    """
    Finite-size correlations against the exact region counts.
    """

    def test_smallest_vertical(self):
        assert correlation_finite(Interaction.V, 2, 1, 2) == Fraction(1, 10)

    def test_times_background_is_the_count(self):
        for n, m, k in even_parameters(max_n=6, max_m=3):
            def spec(family):
                return validate_region(RegionSpec(family=family, n=n, b=2 * m, k=k))

            assert correlation_finite(Interaction.V, n, m, k) * count_st(n, 2 * m) == count_holey(spec(Family.VERTICAL))
            assert correlation_finite(Interaction.HPLUS, n, m, k) * count_st(n, 2 * m) == count_holey(spec(Family.UPPER))
            assert correlation_finite(Interaction.HMINUS, n, m, k) * count_tc(n, 2 * m) == count_holey(spec(Family.LOWER))
            assert correlation_finite(Interaction.H, n, m, k) * count_t(n, 2 * m, n) == count_holey(spec(Family.HOLEY))

    def test_matrix_route(self):
        for n, m, k in even_parameters(max_n=6, max_m=3):
            assert correlation_finite(Interaction.HPLUS, n, m, k) == Fraction(
                abs(determinant(build_lgv_matrix(n, m, k, weighted=True))), count_st(n, 2 * m)
            )
            assert correlation_finite(Interaction.HMINUS, n, m, k) == Fraction(
                abs(determinant(build_lgv_matrix(n, m, k, weighted=False))), count_tc(n, 2 * m)
            )

    def test_vertical_allows_small_k(self):
        assert correlation_finite(Interaction.V, 2, 1, 0) == Fraction(3, 10)

    def test_invalid(self):
        with pytest.raises(InvalidParams):
            correlation_finite(Interaction.V, 4, 2, 1)
        with pytest.raises(InvalidParams):
            correlation_finite(Interaction.HPLUS, 4, 2, 0)
        with pytest.raises(InvalidParams):
            correlation_finite(Interaction.H, 3, 0, 3)


class TestCorrelationHypergeometric:
    """
    The transformed 4F3 forms reproduce the finite sums exactly.
    """

    @pytest.mark.parametrize("which", list(Interaction))
    def test_matches_finite_sum(self, which):
        for n, m, k in even_parameters():
            assert correlation_hypergeometric(which, n, m, k) == correlation_finite(which, n, m, k)

    def test_hand_checked_values(self):
        assert correlation_hypergeometric(Interaction.V, 4, 2, 4) == Fraction(41, 462)
        assert correlation_hypergeometric(Interaction.HPLUS, 4, 2, 4) == Fraction(13, 462)
        assert correlation_hypergeometric(Interaction.HMINUS, 4, 2, 4) == Fraction(31, 42)
        assert correlation_hypergeometric(Interaction.V, 4, 2, 2) == Fraction(23, 231)
        assert correlation_hypergeometric(Interaction.V, 5, 2, 3) == Fraction(1, 26)
        assert correlation_hypergeometric(Interaction.HPLUS, 5, 2, 3) == Fraction(35, 858)
        assert correlation_hypergeometric(Interaction.HMINUS, 5, 2, 3) == Fraction(23, 198)

    def test_needs_terminating_parameter(self):
        with pytest.raises(InvalidParams):
            correlation_hypergeometric(Interaction.V, 4, 2, 0)


class TestCorrelationLimit:
    """
    Closed forms of the limits and their large-k asymptotes.
    """

    def test_vertical_at_k_two(self):
        result = correlation_limit(Interaction.V, 2, 1)
        assert result.exact_value == Fraction(1, 4)
        assert result.factor_label == "sqrt(xi(xi+2))/pi"
        assert result.float_value == pytest.approx(math.sqrt(3) / (4 * math.pi), rel=1e-12)
        assert result.float_value_with_e == pytest.approx(result.float_value / math.e, rel=1e-12)
        assert result.adjudicated == "without_e"

    def test_vertical_equals_lower(self):
        for k in range(2, 8):
            for xi in (Fraction(1), Fraction(1, 3), Fraction(5, 2)):
                vertical = correlation_limit(Interaction.V, k, xi)
                lower = correlation_limit(Interaction.HMINUS, k, xi)
                assert vertical.exact_value == lower.exact_value

    def test_two_hole_limit_factorizes(self):
        for k in (2, 5, 9):
            whole = correlation_limit(Interaction.H, k, "3/2")
            upper = correlation_limit(Interaction.HPLUS, k, "3/2")
            lower = correlation_limit(Interaction.HMINUS, k, "3/2")
            assert whole.exact_value == upper.exact_value * lower.exact_value
            assert whole.float_value == pytest.approx(upper.float_value * lower.float_value, rel=1e-12)
            assert whole.float_value_with_e == pytest.approx(
                upper.float_value_with_e * lower.float_value_with_e, rel=1e-12
            )

    def test_ratio_field(self):
        result = correlation_limit(Interaction.HPLUS, 6, 2)
        assert result.ratio == pytest.approx(result.float_value / result.asymptote)

    def test_k_too_small(self):
        with pytest.raises(KTooSmall):
            correlation_limit(Interaction.V, 1, 1)

    def test_bad_xi(self):
        with pytest.raises(InvalidParams):
            correlation_limit(Interaction.V, 3, 0)


class TestAsymptote:
    """
    Large-k comparators.
    """

    def test_vertical_value(self):
        assert asymptote(Interaction.V, 10, 1) == pytest.approx(math.sqrt(3) / (20 * math.pi), rel=1e-12)
        assert asymptote(Interaction.V, 10, 1) == pytest.approx(0.027566, abs=1e-6)

    def test_power_laws_at_xi_one(self):
        first = asymptote(Interaction.V, 2, 1) * 2
        second = asymptote(Interaction.H, 2, 1) * 4
        for k in range(3, 30):
            assert asymptote(Interaction.V, k, 1) * k == pytest.approx(first)
            assert asymptote(Interaction.H, k, 1) * k**2 == pytest.approx(second)

    def test_two_hole_is_product(self):
        for xi in (1, Fraction(1, 2), 4):
            for k in (3, 7):
                assert asymptote(Interaction.H, k, xi) == pytest.approx(
                    asymptote(Interaction.V, k, xi) * asymptote(Interaction.HPLUS, k, xi)
                )

    @pytest.mark.parametrize("which", [Interaction.V, Interaction.H])
    def test_ratio_approaches_one(self, which):
        table = asymptote_table(which, 1, [10, 20, 40, 100])
        gaps = (table["ratio"] - 1).abs().tolist()
        assert list(table["k"]) == [10, 20, 40, 100]
        assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))
        assert gaps[-1] < 0.05

    def test_table_propagates_domain_errors(self):
        with pytest.raises(KTooSmall):
            asymptote_table(Interaction.V, 1, [1, 2])


class TestConvergenceReport:
    """
    Finite-size values approach the limit without the factor e.
    """

    def test_grid_point(self):
        assert grid_point(100, 2, Fraction(1)) == (100, 50)
        assert grid_point(101, 2, Fraction(1)) == (102, 51)
        assert grid_point(3, 1, Fraction(1, 10)) == (3, 1)
        assert grid_point(400, 3, Fraction(1)) == (401, 201)
        assert grid_point(10, 2, Fraction(1, 2)) == (10, 3)

    def test_vertical_convergence(self):
        report = convergence_report(Interaction.V, 2, 1, [400, 100, 200])
        assert list(report.columns) == ["n", "m", "finite", "limit_e", "limit_noe", "ratio_e", "ratio_noe"]
        assert list(report["n"]) == [100, 200, 400]
        gaps = (report["ratio_noe"] - 1).abs().tolist()
        assert gaps[-1] < gaps[0]
        assert gaps[-1] < 0.02
        assert report["ratio_e"].iloc[-1] == pytest.approx(math.e, rel=0.05)
        assert adjudicate(report) == "without_e"

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_one_candidate_wins_at_every_distance(self, k):
        report = convergence_report(Interaction.V, k, 1, [400])
        assert abs(report["ratio_noe"].iloc[0] - 1) < 0.01
        assert abs(report["ratio_e"].iloc[0] - 1) > 0.01
        assert adjudicate(report) == "without_e"

    def test_lower_differs_from_vertical_at_finite_size(self):
        vertical = convergence_report(Interaction.V, 2, 1, [40])
        lower = convergence_report(Interaction.HMINUS, 2, 1, [40])
        assert vertical["finite"].iloc[0] != lower["finite"].iloc[0]
        assert vertical["limit_noe"].iloc[0] == pytest.approx(lower["limit_noe"].iloc[0])

    def test_empty_grid(self):
        report = convergence_report(Interaction.V, 2, 1, [])
        assert report.empty
        assert adjudicate(report) == "undecided"

    def test_invalid_grid_point(self):
        with pytest.raises(InvalidParams):
            convergence_report(Interaction.V, 4, 1, [1])
