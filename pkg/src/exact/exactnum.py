"""
Exact integer and rational arithmetic, combinatorial primitives and the dense
matrix containers used throughout the package.

Entries are stored as ``fractions.Fraction`` inside numpy object arrays, so
numpy slicing and ``@`` products stay exact.
"""
import math
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Union

import numpy as np

from src.models.exceptions import DomainError, InvalidParams, OddSize, StructureViolation

ExactInt = int
ExactRational = Fraction
Number = Union[int, Fraction]


def as_fraction(value: Number) -> Fraction:
    """Coerce an int or Fraction to a Fraction."""
    return value if isinstance(value, Fraction) else Fraction(value)


def as_integer(value: Number) -> int:
    """
    Return ``value`` as an int, requiring it to be integral.

    Raises:
        DomainError: If ``value`` has a non-unit denominator.
    """
    value = as_fraction(value)
    if value.denominator != 1:
        raise DomainError(f"Expected an integer argument, received {value}.")
    return value.numerator


def half(value: Number) -> int:
    """
    Exact half of an even integer.

    Raises:
        DomainError: If ``value`` is odd or not an integer.
    """
    doubled = as_integer(value)
    if doubled % 2:
        raise DomainError(f"Half-integer argument {Fraction(doubled, 2)} is not allowed.")
    return doubled // 2


def binomial(n: int, j: int) -> ExactInt:
    """
    Binomial coefficient C(n, j), total over the integers.

    Returns 0 for ``j < 0`` and for ``j > n >= 0``. Negative ``n`` uses the
    generalized identity C(n, j) = (-1)^j C(j - n - 1, j).
    """
    if j < 0:
        return 0
    if n < 0:
        return (-1) ** j * binomial(j - n - 1, j)
    if j > n:
        return 0
    return math.comb(n, j)


def pochhammer(a: Number, s: int) -> ExactRational:
    """
    Rising factorial (a)_s = a(a+1)...(a+s-1), with (a)_0 = 1.

    Raises:
        InvalidParams: If ``s`` is negative.
    """
    if s < 0:
        raise InvalidParams(f"Pochhammer length must be non-negative, received {s}.")
    a = as_fraction(a)
    result = Fraction(1)
    for offset in range(s):
        result *= a + offset
    return result


def factorial_quotient(
    numerator: Iterable[Number],
    denominator: Iterable[Number],
    coefficient: Number = 1,
) -> ExactRational:
    """
    Evaluate ``coefficient * prod(a!) / prod(b!)`` exactly.

    A negative integer in ``denominator`` makes the whole term 0 (reciprocal
    gamma convention); this is decided before any numerator factor is looked
    at.

    Args:
        numerator: Factorial arguments of the numerator.
        denominator: Factorial arguments of the denominator.
        coefficient: Rational prefactor.

    Returns:
        ExactRational: The value of the quotient.

    Raises:
        DomainError: If an argument is not an integer, or a numerator argument
            is a negative integer.
    """
    top: List[int] = [as_integer(arg) for arg in numerator]
    bottom: List[int] = [as_integer(arg) for arg in denominator]
    if any(arg < 0 for arg in bottom):
        return Fraction(0)
    if any(arg < 0 for arg in top):
        raise DomainError(f"Negative factorial in numerator: {top}.")
    value = as_fraction(coefficient)
    for arg in top:
        value *= math.factorial(arg)
    for arg in bottom:
        value /= math.factorial(arg)
    return value


def _to_object_array(rows: Sequence[Sequence[Number]]) -> np.ndarray:
    height = len(rows)
    width = len(rows[0]) if height else 0
    array = np.empty((height, width), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise InvalidParams("Matrix rows must all have the same length.")
        for j, value in enumerate(row):
            array[i, j] = as_fraction(value)
    return array


class ExactMatrix:
    """
    Dense matrix over the rationals.

    Entries are exposed 1-based through ``entry`` to match how matrix formulas
    are written; ``array`` gives the underlying 0-based numpy object array.
    """

    def __init__(self, rows: Union[Sequence[Sequence[Number]], np.ndarray]):
        if isinstance(rows, np.ndarray):
            rows = rows.tolist()
        self.__array = _to_object_array(rows)
        self._validate_input()

    @classmethod
    def from_function(cls, rows: int, cols: int, func: Callable[[int, int], Number]) -> "ExactMatrix":
        """Build a matrix whose (i, j) entry, 1-based, is ``func(i, j)``."""
        return cls([[func(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)])

    @property
    def array(self) -> np.ndarray:
        """A copy of the underlying numpy object array."""
        return self.__array.copy()

    @property
    def rows(self) -> int:
        return self.__array.shape[0]

    @property
    def cols(self) -> int:
        return self.__array.shape[1]

    @property
    def shape(self):
        return self.__array.shape

    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> ExactRational:
        """1-based entry access."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"Entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix.")
        return self.__array[i - 1, j - 1]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        """Submatrix on the given 1-based row and column index lists, in that order."""
        return ExactMatrix([[self.entry(i, j) for j in cols] for i in rows])

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self.__array.flat)

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self.__array]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise InvalidParams(f"Cannot multiply {self.shape} by {other.shape}.")
        return ExactMatrix(self.__array.dot(other.array))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(-self.__array)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.__array, other.array))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.__array)
        return f"{type(self).__name__}([{body}])"

    def _validate_input(self):
        """
        Validate the matrix shape.

        Raises:
            InvalidParams: If the array is not two dimensional.
        """
        if self.__array.ndim != 2:
            raise InvalidParams("Matrix data must be two dimensional.")


class SkewMatrix(ExactMatrix):
    """
    Skew-symmetric matrix of even size.

    Raises:
        OddSize: If the matrix is not square of even size.
        StructureViolation: If some entry breaks a_{ij} = -a_{ji}.
    """

    @classmethod
    def from_upper(cls, size: int, func: Callable[[int, int], Number]) -> "SkewMatrix":
        """Build from the strict upper triangle ``func(i, j)`` for i < j, 1-based."""
        upper = {(i, j): as_fraction(func(i, j)) for i in range(1, size + 1) for j in range(i + 1, size + 1)}

        def value(i: int, j: int) -> Number:
            if i < j:
                return upper[(i, j)]
            if i > j:
                return -upper[(j, i)]
            return 0

        return cls.from_function(size, size, value)

    def _validate_input(self):
        super()._validate_input()
        if not self.is_square() or self.rows % 2:
            raise OddSize(f"Skew matrix must be square of even size, received {self.shape}.")
        array = self.array
        if not np.array_equal(array, -array.T):
            raise StructureViolation("Matrix is not skew-symmetric.")
