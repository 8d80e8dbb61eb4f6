"""
Closed-form LU factorizations of the reduced path matrices, assembled from the
coefficient families.
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import Callable, Tuple

from src.enumeration.closed_forms import (
    coefficient_a,
    coefficient_a_prime,
    coefficient_b,
    coefficient_b_prime,
    coefficient_b_star,
    coefficient_c,
    coefficient_c_prime,
    coefficient_d,
    coefficient_d_prime,
    coefficient_d_star,
    coefficient_e,
    coefficient_e_star,
    coefficient_p_star,
    sum_lower,
    sum_upper,
    sum_vertical,
)
from src.exact.exactnum import ExactMatrix
from src.linalg.path_matrices import BParity, build_lgv_matrix, build_reduced_matrix
from src.models.exceptions import InternalMismatch, InvalidParams


class LUTarget(str, Enum):
    """
    Matrices with a closed-form LU factorization.
    """

    FHAT = "Fhat"
    GPLUS = "Gplus"
    FSTARHAT = "FstarHat"
    G = "G"


def _lower(m: int, block: Callable[[int, int], Fraction], border: Callable[[int], Fraction]) -> ExactMatrix:
    def entry(i: int, j: int) -> Fraction:
        if i <= m and j <= i:
            return block(i, j)
        if i == m + 1 and j <= m:
            return border(j)
        return Fraction(int(i == j == m + 1))

    return ExactMatrix.from_function(m + 1, m + 1, entry)


def _upper(
    m: int, block: Callable[[int, int], Fraction], border: Callable[[int], Fraction], corner: Fraction
) -> ExactMatrix:
    def entry(i: int, j: int) -> Fraction:
        if i <= j <= m:
            return block(i, j)
        if j == m + 1 and i <= m:
            return border(i)
        if i == j == m + 1:
            return corner
        return Fraction(0)

    return ExactMatrix.from_function(m + 1, m + 1, entry)


def _check_params(target: LUTarget, n: int, m: int, k: int):
    if n < 1 or m < 1 or not 0 <= k <= n:
        raise InvalidParams(f"LU factors need n, m >= 1 and 0 <= k <= n, received n={n}, m={m}, k={k}.")
    odd = target is LUTarget.FSTARHAT
    if ((n - k) % 2 == 1) != odd:
        raise InvalidParams(f"n={n} and k={k} have the wrong relative parity for {target.value}.")


def closed_form_lu(target: LUTarget, n: int, m: int, k: int) -> Tuple[ExactMatrix, ExactMatrix]:
    """
    L and U factors of a reduced path matrix, from the coefficient families.

    Args:
        target (LUTarget): The factored matrix.
        n (int): Side a.
        m (int): b = 2m, or b = 2m - 1 for ``FstarHat``.
        k (int): Hole distance.

    Returns:
        Tuple[ExactMatrix, ExactMatrix]: (L, U), both (m+1) x (m+1).

    Raises:
        InvalidParams: If the parameters are inconsistent with the target.
    """
    target = LUTarget(target)
    _check_params(target, n, m, k)

    if target is LUTarget.G:
        lower = _lower(m, lambda i, j: coefficient_a_prime(n, i, j), lambda j: coefficient_b_prime(n, k, j))
        upper = _upper(
            m,
            lambda i, j: coefficient_c_prime(n, i, j),
            lambda i: coefficient_d_prime(n, k, i),
            -sum_lower(n, m, k),
        )
        return lower, upper

    if target is LUTarget.FSTARHAT:
        corner = -sum(
            (coefficient_d_star(n, s) * coefficient_b_star(n, k, s) for s in range(1, m)), Fraction(0)
        ) / coefficient_d_star(n, m)
        lower = _lower(
            m,
            lambda i, j: coefficient_a(n, i, j),
            lambda j: coefficient_b_star(n, k, j) if j < m else corner,
        )

        def upper_entry(i: int, j: int) -> Fraction:
            if j == m and i <= m:
                return coefficient_d_star(n, i)
            if i <= j <= m - 1:
                return coefficient_c(n, i, j)
            if j == m + 1 and i <= m:
                return coefficient_e_star(n, k, i)
            if i == j == m + 1:
                return coefficient_p_star(n, k, m)
            return Fraction(0)

        return lower, ExactMatrix.from_function(m + 1, m + 1, upper_entry)

    lower = _lower(m, lambda i, j: coefficient_a(n, i, j), lambda j: coefficient_b(n, k, j))
    if target is LUTarget.FHAT:
        upper = _upper(
            m, lambda i, j: coefficient_c(n, i, j), lambda i: coefficient_d(n, k, i), -sum_vertical(n, m, k)
        )
    else:
        upper = _upper(
            m, lambda i, j: coefficient_c(n, i, j), lambda i: coefficient_e(n, k, i), -sum_upper(n, m, k)
        )
    return lower, upper


def target_matrix(target: LUTarget, n: int, m: int, k: int) -> ExactMatrix:
    """The matrix that ``closed_form_lu(target, n, m, k)`` factors, built independently."""
    target = LUTarget(target)
    if target is LUTarget.FHAT:
        return build_reduced_matrix(n, m, k, BParity.EVEN)
    if target is LUTarget.FSTARHAT:
        return build_reduced_matrix(n, m, k, BParity.ODD)
    return build_lgv_matrix(n, m, k, weighted=target is LUTarget.GPLUS)


def certify_lu(target: LUTarget, n: int, m: int, k: int) -> bool:
    """
    Check L * U against the independently built target matrix entrywise.

    Raises:
        InternalMismatch: If the product differs from the target.
    """
    lower, upper = closed_form_lu(target, n, m, k)
    if lower @ upper != target_matrix(target, n, m, k):
        raise InternalMismatch(f"L*U differs from {LUTarget(target).value} at n={n}, m={m}, k={k}.")
    logging.info("Certified the LU factors of %s at n=%s, m=%s, k=%s.", LUTarget(target).value, n, m, k)
    return True
