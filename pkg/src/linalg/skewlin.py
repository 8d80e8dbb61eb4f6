"""
Exact determinants and Pfaffians.

``closed_form_lu`` is built from the coefficient families and lives in
``src.enumeration.lu_factors``; it is re-exported here with the rest of the
linear algebra.
"""
import logging
from fractions import Fraction
from typing import Iterator, List, Tuple

from src.enumeration.lu_factors import LUTarget, certify_lu, closed_form_lu
from src.exact.exactnum import ExactMatrix, ExactRational, SkewMatrix
from src.models.exceptions import NotSquare, OddSize, TooLarge

COMBINATORIAL_LIMIT = 12

__all__ = [
    "LUTarget",
    "certify_lu",
    "closed_form_lu",
    "determinant",
    "pfaffian",
    "pfaffian_combinatorial",
    "all_pairings",
]


def determinant(matrix: ExactMatrix) -> ExactRational:
    """
    Exact determinant by Bareiss fraction-free elimination.

    Args:
        matrix (ExactMatrix): A square matrix.

    Returns:
        ExactRational: The determinant; 1 for the empty matrix.

    Raises:
        NotSquare: If ``matrix`` is not square.
    """
    if not matrix.is_square():
        raise NotSquare(f"Determinant needs a square matrix, received {matrix.shape}.")
    size = matrix.rows
    work = matrix.array
    sign = 1
    previous = Fraction(1)
    for k in range(size - 1):
        if work[k, k] == 0:
            for i in range(k + 1, size):
                if work[i, k] != 0:
                    work[[k, i]] = work[[i, k]]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i, j] = (work[k, k] * work[i, j] - work[i, k] * work[k, j]) / previous
        previous = work[k, k]
    if size == 0:
        return Fraction(1)
    return sign * work[size - 1, size - 1]


def pfaffian(matrix: SkewMatrix) -> ExactRational:
    """
    Exact Pfaffian by skew-symmetric elimination.

    Each step moves a non-zero entry of the leading row next to the diagonal
    by a simultaneous row and column swap, then clears the rest of that row by
    congruence with unit-determinant operations. The sign convention gives
    Pf([[0, a], [-a, 0]]) = a.

    Args:
        matrix (SkewMatrix): A skew-symmetric matrix of even size.

    Raises:
        OddSize: If ``matrix`` is not a SkewMatrix of even size.
    """
    if not isinstance(matrix, SkewMatrix) or matrix.rows % 2:
        raise OddSize("Pfaffian needs a skew-symmetric matrix of even size.")
    size = matrix.rows
    work = matrix.array
    value = Fraction(1)
    for k in range(0, size, 2):
        pivot = next((j for j in range(k + 1, size) if work[k, j] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k + 1:
            work[[k + 1, pivot]] = work[[pivot, k + 1]]
            work[:, [k + 1, pivot]] = work[:, [pivot, k + 1]]
            value = -value
        value *= work[k, k + 1]
        for i in range(k + 2, size):
            factor = work[k, i] / work[k, k + 1]
            if factor:
                work[:, i] -= factor * work[:, k + 1]
                work[i, :] -= factor * work[k + 1, :]
    return value


def all_pairings(items: List[int]) -> Iterator[List[Tuple[int, int]]]:
    """
    Yields all pairings (partitions into parts of size 2) of ``items``.
    """
    items = list(items)
    if not items:
        yield []
        return
    first = items.pop(0)
    for index, item in enumerate(items):
        for pairing in all_pairings(items[:index] + items[index + 1 :]):
            yield [(first, item)] + pairing


def crossings(pairing: List[Tuple[int, int]]) -> int:
    """Number of crossing pairs of arcs when the pairs are drawn above a line."""
    total = 0
    for index, (a, b) in enumerate(pairing):
        for c, d in pairing[index + 1 :]:
            if a < c < b < d or c < a < d < b:
                total += 1
    return total


def pfaffian_combinatorial(matrix: SkewMatrix) -> ExactRational:
    """
    Pfaffian as the signed sum over perfect matchings, the sign of a matching
    being (-1) to the power of its crossing number.

    Raises:
        OddSize: If ``matrix`` is not a SkewMatrix of even size.
        TooLarge: If the size exceeds 12.
    """
    if not isinstance(matrix, SkewMatrix) or matrix.rows % 2:
        raise OddSize("Pfaffian needs a skew-symmetric matrix of even size.")
    if matrix.rows > COMBINATORIAL_LIMIT:
        raise TooLarge(f"Matching expansion is limited to size {COMBINATORIAL_LIMIT}, received {matrix.rows}.")
    logging.info("Expanding the Pfaffian of a %sx%s matrix over matchings.", matrix.rows, matrix.rows)
    array = matrix.array
    total = Fraction(0)
    for pairing in all_pairings(range(matrix.rows)):
        term = Fraction(-1 if crossings(pairing) % 2 else 1)
        for i, j in pairing:
            term *= array[i, j]
            if not term:
                break
        total += term
    return total
