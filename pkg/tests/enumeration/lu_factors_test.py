"""
    Tests for the closed-form LU factorizations.
"""
import pytest

from src.enumeration.closed_forms import coefficient_a, coefficient_c, count_st
from src.enumeration.lu_factors import LUTarget, certify_lu, closed_form_lu
from src.linalg.path_matrices import BParity, build_reduced_matrix
from src.linalg.skewlin import closed_form_lu as reexported
from src.linalg.skewlin import determinant
from src.models.exceptions import InvalidParams


def parameters(target, max_n=8, max_m=4):
    lowest = 2 if target in (LUTarget.G, LUTarget.GPLUS) else 0
    odd = target is LUTarget.FSTARHAT
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for k in range(lowest, n + 1):
                if ((n - k) % 2 == 1) == odd:
                    yield n, m, k


class TestClosedFormLU:
    """
    L * U reproduces each target matrix entrywise on every small parameter set.
    """

    @pytest.mark.parametrize("target", list(LUTarget))
    def test_product_equals_target(self, target):
        for n, m, k in parameters(target):
            assert certify_lu(target, n, m, k)

    def test_shapes_and_unit_corner(self):
        lower, upper = closed_form_lu(LUTarget.FHAT, 4, 2, 2)
        assert lower.shape == upper.shape == (3, 3)
        assert lower.entry(3, 3) == 1
        assert upper.entry(3, 1) == 0

    def test_lower_is_unit_triangular_on_the_block(self):
        lower, _ = closed_form_lu(LUTarget.G, 6, 3, 2)
        for i in range(1, 4):
            assert lower.entry(i, i) == 1
            for j in range(i + 1, 5):
                assert lower.entry(i, j) == 0

    def test_diagonal_product_is_symmetric_plane_partitions(self):
        for n in range(1, 7):
            for m in range(1, 4):
                _, upper = closed_form_lu(LUTarget.FHAT, n, m, n)
                product = 1
                for i in range(1, m + 1):
                    product *= upper.entry(i, i)
                assert product == count_st(n, 2 * m)

    def test_leading_minor_is_symmetric_plane_partitions(self):
        reduced = build_reduced_matrix(5, 3, 1, BParity.EVEN)
        block = reduced.submatrix(range(1, 4), range(1, 4))
        assert determinant(block) == count_st(5, 6)

    def test_diagonal_of_a(self):
        assert all(coefficient_a(n, i, i) == 1 for n in range(1, 8) for i in range(1, 8))

    def test_symmetry_of_a_times_c(self):
        for n in range(1, 6):
            for i in range(1, 5):
                for j in range(1, 5):
                    assert coefficient_a(n, i, j) * coefficient_c(n, i, j) == coefficient_a(
                        n, j, i
                    ) * coefficient_c(n, j, i)

    def test_reexported_from_skewlin(self):
        assert reexported is closed_form_lu

    def test_parity_mismatch(self):
        with pytest.raises(InvalidParams):
            closed_form_lu(LUTarget.FSTARHAT, 4, 2, 2)
        with pytest.raises(InvalidParams):
            closed_form_lu(LUTarget.GPLUS, 5, 2, 2)
