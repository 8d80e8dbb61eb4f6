"""
Pfaffian and determinant matrices whose values count symmetric tilings, and
the structured reductions that turn the Pfaffians into smaller determinants.

Matrix formulas are 1-based throughout; numpy object arrays are indexed
0-based inside the reduction routines.
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import List

import numpy as np

from src.exact.exactnum import ExactMatrix, SkewMatrix, binomial, half
from src.models.exceptions import InternalMismatch, InvalidParams, StructureViolation


class BParity(str, Enum):
    """
    Parity of the side b = 2m (even) or b = 2m - 1 (odd).
    """

    EVEN = "even"
    ODD = "odd"


def _validate_params(n: int, m: int, k: int, parity: BParity):
    """
    Raises:
        InvalidParams: If the parameters do not describe a valid region.
    """
    if n < 1 or m < 1:
        raise InvalidParams(f"Matrix parameters need n >= 1 and m >= 1, received n={n}, m={m}.")
    if not 0 <= k <= n:
        raise InvalidParams(f"Matrix parameters need 0 <= k <= n, received k={k}, n={n}.")
    same_parity = (n - k) % 2 == 0
    if same_parity != (BParity(parity) is BParity.EVEN):
        raise InvalidParams(f"n={n} and k={k} do not match a b of {BParity(parity).value} parity.")


def central_sum(n: int, low: int, high: int) -> int:
    """Sum of C(2n, n + r) for r from ``low`` to ``high`` inclusive, reversed and negated when high < low."""
    if high >= low:
        return sum(binomial(2 * n, n + r) for r in range(low, high + 1))
    return -sum(binomial(2 * n, n + r) for r in range(high + 1, low))


def build_pfaffian_matrix(n: int, m: int, k: int, b_parity: BParity) -> SkewMatrix:
    """
    The (2m+2) x (2m+2) skew matrix whose Pfaffian counts the vertically
    symmetric tilings of the holey hexagon with sides n and b.

    For even b this is F. For odd b it is F*, whose column 2m carries the 2^n
    entries of the phantom vertex.

    Args:
        n (int): Side a.
        m (int): b = 2m or b = 2m - 1.
        k (int): Hole distance.
        b_parity (BParity): Parity of b.

    Raises:
        InvalidParams: If the parameters are inconsistent.
    """
    _validate_params(n, m, k, b_parity)
    parity = BParity(b_parity)
    distance = n - k

    if parity is BParity.EVEN:

        def upper(i: int, j: int) -> int:
            if j <= 2 * m:
                return central_sum(n, i - j + 1, j - i)
            if i > 2 * m:
                return 0
            if j == 2 * m + 1:
                return binomial(distance, half(distance) - m + i)
            return binomial(distance, half(distance) - m - 1 + i)

    else:

        def upper(i: int, j: int) -> int:
            if i >= 2 * m:
                return 0
            if j <= 2 * m - 1:
                return central_sum(n, i - j + 1, j - i)
            if j == 2 * m:
                return 2**n
            if j == 2 * m + 1:
                return binomial(distance, half(distance + 1) - m + i)
            return binomial(distance, half(distance - 1) - m + i)

    return SkewMatrix.from_upper(2 * m + 2, upper)


def build_lgv_matrix(n: int, m: int, k: int, weighted: bool) -> ExactMatrix:
    """
    The (m+1) x (m+1) path matrix of the lower half (G) or of the weighted
    upper half (G+) of the holey hexagon with sides n and 2m.

    Raises:
        InvalidParams: If the parameters are inconsistent.
    """
    _validate_params(n, m, k, BParity.EVEN)
    middle = half(n - k)

    if weighted:

        def entry(i: int, j: int) -> int:
            if i <= m and j <= m:
                return binomial(2 * n, n - i - j + 1) + binomial(2 * n, n + i - j)
            if i <= m:
                return binomial(n - k + 1, middle + i)
            if j <= m:
                return binomial(n - k + 1, middle + j)
            return 0

    else:

        def entry(i: int, j: int) -> int:
            if i <= m and j <= m:
                return binomial(2 * n, n + j - i) - binomial(2 * n, n - j - i + 1)
            if i <= m:
                return binomial(n - k, middle + 1 - i) - binomial(n - k, middle - i)
            if j <= m:
                return binomial(n - k, middle + 1 - j) - binomial(n - k, middle - j)
            return 0

    return ExactMatrix.from_function(m + 1, m + 1, entry)


def gordon_sign(l: int) -> int:
    """(-1) to the power C(l, 2)."""
    return -1 if (l * (l - 1) // 2) % 2 else 1


class GordonInput:
    """
    Skew matrix A = [[X, Y], [-Y^t, Z]] with X of size 2m and Z of size 2l,
    satisfying the three structural properties of the generalized reduction:

    * X is a skew Toeplitz block, X_{ij} = x_{j-i};
    * z_{i,j} + z_{i+l,j} + z_{i,j+l} + z_{i+l,j+l} = 0 for 1 <= i, j <= l;
    * y_{i,j} = y_{2m-i,j} for i <= m, j <= l, and
      y_{i,j} = y_{2m+1-i,j-l} for j > l.

    Raises:
        StructureViolation: If a property fails.
        InvalidParams: If the block sizes do not fit the matrix.
    """

    def __init__(self, matrix: SkewMatrix, m: int, l: int):
        if m < 1 or l < 0 or matrix.rows != 2 * m + 2 * l:
            raise InvalidParams(f"A {matrix.rows}x{matrix.rows} matrix does not split with m={m}, l={l}.")
        self.__matrix = matrix
        self.__m = m
        self.__l = l
        self.__validate_input()

    @property
    def matrix(self) -> SkewMatrix:
        return self.__matrix

    @property
    def m(self) -> int:
        return self.__m

    @property
    def l(self) -> int:
        return self.__l

    def x(self, r: int) -> Fraction:
        """Toeplitz symbol x_r, with x_0 = 0 and x_{-r} = -x_r."""
        if r < 0:
            return -self.x(-r)
        if r == 0:
            return Fraction(0)
        return self.__matrix.entry(1, 1 + r)

    def y(self, i: int, j: int) -> Fraction:
        return self.__matrix.entry(i, 2 * self.__m + j)

    def z(self, i: int, j: int) -> Fraction:
        return self.__matrix.entry(2 * self.__m + i, 2 * self.__m + j)

    def __validate_input(self):
        m, l = self.__m, self.__l
        for i in range(1, 2 * m + 1):
            for j in range(i, 2 * m + 1):
                if self.__matrix.entry(i, j) != self.x(j - i):
                    raise StructureViolation(f"X block is not Toeplitz at ({i}, {j}).")
        for i in range(1, l + 1):
            for j in range(1, l + 1):
                if self.z(i, j) + self.z(i + l, j) + self.z(i, j + l) + self.z(i + l, j + l) != 0:
                    raise StructureViolation(f"Z block breaks the four-term relation at ({i}, {j}).")
        for j in range(1, l + 1):
            for i in range(1, m + 1):
                if self.y(i, j) != self.y(2 * m - i, j):
                    raise StructureViolation(f"Y block breaks the row reflection at ({i}, {j}).")
            for i in range(1, 2 * m + 1):
                if self.y(i, j + l) != self.y(2 * m + 1 - i, j):
                    raise StructureViolation(f"Y block breaks the column reflection at ({i}, {j + l}).")


def gordon_reduce(data: GordonInput) -> ExactMatrix:
    """
    Reduce the Pfaffian of a structured skew matrix to a determinant of half
    the size: Pf(A) = (-1)^C(l,2) det(B).

    Args:
        data (GordonInput): The structured matrix.

    Returns:
        ExactMatrix: The (m+l) x (m+l) matrix B = [[X^, Y1^], [Y2^, Z^]].
    """
    m, l = data.m, data.l
    x, y, z = data.x, data.y, data.z

    def entry(i: int, j: int) -> Fraction:
        if i <= m and j <= m:
            return sum((x(t) for t in range(abs(i - j) + 1, i + j, 2)), Fraction(0))
        if i <= m:
            column = j - m
            return sum((y(m + 1 - i + 2 * s, column) - y(m + i - 2 * s, column) for s in range(i)), Fraction(0))
        if j <= m:
            row = i - m
            return sum((y(j + m - 2 * s, row) + y(m + 1 - j + 2 * s, row) for s in range(j)), Fraction(0))
        return z(i - m, j - m + l) + z(i - m + l, j - m + l)

    return ExactMatrix.from_function(m + l, m + l, entry)


def _difference_rows(array: np.ndarray, rows: List[int]) -> np.ndarray:
    """Simultaneously replace each listed row r (0-based) by row r minus row r - 1."""
    result = array.copy()
    for r in rows:
        result[r, :] = array[r, :] - array[r - 1, :]
    return result


def _difference_columns(array: np.ndarray, cols: List[int]) -> np.ndarray:
    return _difference_rows(array.T, cols).T


def reduced_matrix_literal(n: int, m: int, k: int, b_parity: BParity) -> ExactMatrix:
    """
    F-hat (even b) or F*-hat (odd b) obtained by executing the row and column
    operations on the Pfaffian matrix.
    """
    parity = BParity(b_parity)
    pfaffian_matrix = build_pfaffian_matrix(n, m, k, parity)
    if parity is BParity.EVEN:
        reduced = gordon_reduce(GordonInput(pfaffian_matrix, m, 1)).array
        reduced = _difference_rows(reduced, list(range(1, m)))
        return ExactMatrix(_difference_columns(reduced, list(range(1, m))))

    array = pfaffian_matrix.array
    size = 2 * m + 2
    # row i := row i + row i+2 + ... + row 2m-i, for i = 1..m, then the same on columns
    summed = array.copy()
    for i in range(m):
        summed[i, :] = sum((array[r, :] for r in range(i, 2 * m - 1 - i, 2)), np.zeros(size, dtype=object))
    array = summed.copy()
    for i in range(m):
        array[:, i] = sum((summed[:, c] for c in range(i, 2 * m - 1 - i, 2)), np.zeros(size, dtype=object))
    array[2 * m, :] -= array[2 * m + 1, :]
    array[:, 2 * m] -= array[:, 2 * m + 1]

    rows = list(range(m - 1, -1, -1)) + [2 * m]
    cols = list(range(m, 2 * m - 1)) + [2 * m - 1, 2 * m + 1]
    reduced = array[np.ix_(rows, cols)]
    reduced = _difference_rows(reduced, list(range(1, m)))
    return ExactMatrix(_difference_columns(reduced, list(range(1, m - 1))))


def _border_column_even(n: int, k: int, i: int) -> Fraction:
    if n == k:
        return Fraction(1) if i == 1 else Fraction(2 * (-1) ** (i + 1))
    factor = Fraction(4 * (i - 1), k - n) + Fraction(2 * i - 1, i + half(n - k))
    return factor * binomial(n - k, half(n - k) - i + 1)


def reduced_matrix_closed_form(n: int, m: int, k: int, b_parity: BParity) -> ExactMatrix:
    """
    F-hat (even b) or F*-hat (odd b) from the displayed entry formulas.
    """
    _validate_params(n, m, k, b_parity)
    parity = BParity(b_parity)

    def block(i: int, j: int) -> int:
        return binomial(2 * n, n - i - j + 1) + binomial(2 * n, n + i - j)

    if parity is BParity.EVEN:

        def entry(i: int, j: int) -> Fraction:
            if i <= m and j <= m:
                return Fraction(block(i, j))
            if i <= m:
                return _border_column_even(n, k, i)
            if j <= m:
                return Fraction(binomial(n - k + 1, half(n - k) + j))
            return Fraction(0)

    else:
        lifted = n - k + 1

        def entry(i: int, j: int) -> Fraction:
            if i <= m:
                if j <= m - 1:
                    return Fraction(block(i, j))
                if j == m:
                    return Fraction(2**n)
                return Fraction(binomial(n - k, half(lifted) - i))
            if j <= m - 1:
                return Fraction(2 * j, lifted) * binomial(lifted, half(lifted) - j) - Fraction(
                    2 * (j - 1), lifted
                ) * binomial(lifted, half(lifted) - j + 1)
            return Fraction(0)

    return ExactMatrix.from_function(m + 1, m + 1, entry)


def build_reduced_matrix(n: int, m: int, k: int, b_parity: BParity) -> ExactMatrix:
    """
    F-hat or F*-hat, built by the literal row and column operations and from
    the closed-form entries, certified equal entrywise.

    Returns:
        ExactMatrix: The (m+1) x (m+1) reduced matrix; its determinant equals
        the Pfaffian of ``build_pfaffian_matrix`` up to sign.

    Raises:
        InvalidParams: If the parameters are inconsistent.
        InternalMismatch: If the two constructions disagree.
    """
    logging.info("Received parameters: n=%s, m=%s, k=%s, b %s. Reducing the Pfaffian matrix.", n, m, k, b_parity)
    closed_form = reduced_matrix_closed_form(n, m, k, b_parity)
    literal = reduced_matrix_literal(n, m, k, b_parity)
    if literal != closed_form:
        raise InternalMismatch(f"Reduced matrix routes disagree for n={n}, m={m}, k={k}, b {b_parity}.")
    return closed_form
