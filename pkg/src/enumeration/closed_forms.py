"""
Coefficient families, classical product formulas and exact enumeration of
the holey regions.

Every family is a factorial expression evaluated exactly; a factorial of a
negative integer in a denominator makes its term vanish.
"""
import logging
from enum import Enum
from fractions import Fraction
from threading import Lock
from typing import Callable, Dict, Optional

from cachetools import LRUCache, cached

from src.exact.exactnum import ExactRational, binomial, factorial_quotient, half, pochhammer
from src.models.exceptions import DomainError, InternalMismatch, InvalidParams
from src.models.validators import Family, ValidatedRegion


def _sign(s: int) -> int:
    return 1 if s % 2 else -1


# Even families: n and k share parity.


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_a(n: int, i: int, j: int) -> ExactRational:
    return factorial_quotient(
        [n, i + j - 2, 2 * j + n - 1],
        [2 * j - 2, i - j, j - i + n, i + j + n - 1],
    )


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_b(n: int, k: int, j: int) -> ExactRational:
    return factorial_quotient(
        [j + n - 1, 2 * j + n - 1, n - k + 1, j + half(k + n) - 2],
        [j - 1, 2 * j + 2 * n - 1, half(n - k), half(k + n) - 1, j + half(n - k)],
        coefficient=_sign(j),
    )


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_c(n: int, i: int, j: int) -> ExactRational:
    return factorial_quotient(
        [n, i + j - 2, 2 * i + 2 * n - 1],
        [j - i, 2 * i + n - 2, i - j + n, i + j + n - 1],
    )


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_d(n: int, k: int, i: int) -> ExactRational:
    first = factorial_quotient(
        [2 * i - 2, i + n - 1, n - k, i + half(k + n) - 2],
        [i - 1, 2 * i + n - 2, half(n - k), half(k + n) - 1, i + half(n - k)],
        coefficient=_sign(i),
    )
    second = factorial_quotient(
        [2 * i - 2, i + n, n - k, i + half(k + n) - 2],
        [i - 2, 2 * i + n - 2, half(n - k), half(k + n), i + half(n - k)],
        coefficient=2 * _sign(i),
    )
    return first + second


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_e(n: int, k: int, s: int) -> ExactRational:
    return factorial_quotient(
        [2 * s - 2, n - k + 1, n + s - 1, half(k + n) + s - 2],
        [s - 1, half(n - k), half(k + n) - 1, n + 2 * s - 2, half(n - k) + s],
        coefficient=_sign(s),
    )


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_a_prime(n: int, i: int, j: int) -> ExactRational:
    return factorial_quotient(
        [n, i + j - 2, 2 * j + n - 1],
        [2 * j - 1, i - j, j - i + n, i + j + n - 1],
        coefficient=2 * i - 1,
    )


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_b_prime(n: int, k: int, j: int) -> ExactRational:
    return factorial_quotient(
        [j + n - 2, 2 * j + n - 1, n - k, j + half(k + n) - 2],
        [j - 1, 2 * j + 2 * n - 3, half(n - k), half(k + n) - 1, j + half(n - k)],
        coefficient=Fraction(_sign(j), 2),
    )


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_c_prime(n: int, i: int, j: int) -> ExactRational:
    return factorial_quotient(
        [n, i + j - 2, 2 * i + 2 * n - 2],
        [j - i, 2 * i + n - 2, i - j + n, i + j + n - 1],
        coefficient=2 * j - 1,
    )


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_d_prime(n: int, k: int, i: int) -> ExactRational:
    return factorial_quotient(
        [2 * i, i + n - 1, n - k, i + half(k + n) - 2],
        [i, 2 * i + n - 2, half(k + n) - 1, half(n - k), i + half(n - k)],
        coefficient=Fraction(_sign(i), 2),
    )


# Odd families: n and k differ in parity.


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_b_star(n: int, k: int, j: int) -> ExactRational:
    # ((2j+k+n-5)/2)! / ((k+n-3)/2)! is the Pochhammer ((k+n-1)/2)_{j-1}
    first = factorial_quotient(
        [j + n - 1, 2 * j + n - 1, n - k],
        [j - 1, 2 * j + 2 * n - 1, half(n - k - 1), half(2 * j - k + n + 1)],
        coefficient=2 * _sign(j),
    )
    if first:
        first *= pochhammer(half(k + n - 1), j - 1)
    second = factorial_quotient(
        [j + n, 2 * j + n - 1, n - k, half(2 * j + k + n - 5)],
        [j - 2, 2 * j + 2 * n - 1, half(n - k - 1), half(k + n - 1), half(2 * j - k + n + 1)],
        coefficient=4 * _sign(j),
    )
    return first + second


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_d_star(n: int, i: int) -> ExactRational:
    return factorial_quotient([2 * i - 2, i + n - 1], [i - 1, 2 * i + n - 2], coefficient=2**n)


@cached(LRUCache(maxsize=65536), lock=Lock())
def coefficient_e_star(n: int, k: int, i: int) -> ExactRational:
    return factorial_quotient(
        [2 * i - 2, i + n - 1, n - k, half(2 * i + k + n - 3)],
        [i - 1, 2 * i + n - 2, half(n - k - 1), half(k + n - 1), half(2 * i - k + n - 1)],
        coefficient=_sign(i),
    )


def coefficient_p_star(n: int, k: int, m: int) -> ExactRational:
    """Sum over s < m of (D*(s) E*(m) / D*(m) - E*(s)) B*(s)."""
    tail = coefficient_e_star(n, k, m) / coefficient_d_star(n, m)
    return sum(
        (
            (coefficient_d_star(n, s) * tail - coefficient_e_star(n, k, s)) * coefficient_b_star(n, k, s)
            for s in range(1, m)
        ),
        Fraction(0),
    )


class CoefficientFamily(str, Enum):
    """
    Tags of the coefficient families.
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    A_PRIME = "A'"
    B_PRIME = "B'"
    C_PRIME = "C'"
    D_PRIME = "D'"
    B_STAR = "B*"
    D_STAR = "D*"
    E_STAR = "E*"
    P_STAR = "P*"


TWO_INDEX: Dict[CoefficientFamily, Callable] = {
    CoefficientFamily.A: coefficient_a,
    CoefficientFamily.C: coefficient_c,
    CoefficientFamily.A_PRIME: coefficient_a_prime,
    CoefficientFamily.C_PRIME: coefficient_c_prime,
}
EVEN_BORDER: Dict[CoefficientFamily, Callable] = {
    CoefficientFamily.B: coefficient_b,
    CoefficientFamily.D: coefficient_d,
    CoefficientFamily.E: coefficient_e,
    CoefficientFamily.B_PRIME: coefficient_b_prime,
    CoefficientFamily.D_PRIME: coefficient_d_prime,
}
ODD_BORDER: Dict[CoefficientFamily, Callable] = {
    CoefficientFamily.B_STAR: coefficient_b_star,
    CoefficientFamily.E_STAR: coefficient_e_star,
    CoefficientFamily.P_STAR: coefficient_p_star,
}


def coefficient(family: CoefficientFamily, n: int, *indices: int, k: Optional[int] = None) -> ExactRational:
    """
    Evaluate a coefficient family.

    Args:
        family (CoefficientFamily): Family tag.
        n (int): Side parameter, at least 1.
        *indices (int): One index (border families) or two (A, C, A', C').
        k (int): Hole distance, required by the families that carry it.

    Returns:
        ExactRational: The exact value.

    Raises:
        DomainError: On a parity mismatch, a missing or out-of-range k, or
            indices below 1.
    """
    family = CoefficientFamily(family)
    if n < 1 or any(index < 1 for index in indices):
        raise DomainError(f"Coefficient {family.value} needs n >= 1 and indices >= 1.")
    if family in TWO_INDEX:
        if len(indices) != 2:
            raise DomainError(f"Coefficient {family.value} takes two indices.")
        return TWO_INDEX[family](n, *indices)
    if len(indices) != 1:
        raise DomainError(f"Coefficient {family.value} takes one index.")
    if family is CoefficientFamily.D_STAR:
        return coefficient_d_star(n, indices[0])
    if k is None or not 0 <= k <= n:
        raise DomainError(f"Coefficient {family.value} needs 0 <= k <= n, received k={k}.")
    if family in EVEN_BORDER:
        if (n - k) % 2:
            raise DomainError(f"Coefficient {family.value} needs n and k of equal parity.")
        return EVEN_BORDER[family](n, k, indices[0])
    if (n - k) % 2 == 0:
        raise DomainError(f"Coefficient {family.value} needs n and k of opposite parity.")
    return ODD_BORDER[family](n, k, indices[0])


# Classical product formulas.


def _integral(value: ExactRational, label: str) -> int:
    if value.denominator != 1:
        raise InternalMismatch(f"{label} evaluated to the non-integer {value}.")
    return value.numerator


def count_t(a: int, b: int, c: int) -> int:
    """Plane partitions in an a x b x c box: tilings of the hexagon H_{a,b,c}."""
    _check_sides(a, b, c)
    value = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for l in range(1, c + 1):
                value *= Fraction(i + j + l - 1, i + j + l - 2)
    return _integral(value, f"T({a},{b},{c})")


def count_st(a: int, b: int) -> int:
    """Symmetric plane partitions: vertically symmetric tilings of H_{a,b}."""
    _check_sides(a, b)
    value = Fraction(1)
    for i in range(1, a + 1):
        value *= Fraction(2 * i + b - 1, 2 * i - 1)
        for j in range(i + 1, a + 1):
            value *= Fraction(i + j + b - 1, i + j - 1)
    return _integral(value, f"ST({a},{b})")


def count_tc(a: int, b: int) -> int:
    """Transpose-complementary plane partitions in an a x a x b box, b even."""
    _check_sides(a, b)
    if b % 2:
        raise InvalidParams(f"TC needs an even second argument, received {b}.")
    half_b = b // 2
    value = Fraction(binomial(a + half_b - 1, a - 1))
    for i in range(1, a - 1):
        for j in range(i, a - 1):
            value *= Fraction(b + i + j + 1, i + j + 1)
    return _integral(value, f"TC({a},{b})")


def _check_sides(*sides: int):
    if any(side < 1 for side in sides):
        raise InvalidParams(f"Sides must be positive, received {sides}.")


def count_plain(shape: str, *sides: int) -> int:
    """
    Evaluate a classical product formula.

    Args:
        shape (str): ``"T"``, ``"ST"`` or ``"TC"``.
        *sides (int): Three sides for T, two for ST and TC.

    Raises:
        InvalidParams: On an unknown shape, wrong arity or bad sides.
    """
    formulas = {"T": (count_t, 3), "ST": (count_st, 2), "TC": (count_tc, 2)}
    if shape not in formulas:
        raise InvalidParams(f"Unknown product formula {shape!r}.")
    formula, arity = formulas[shape]
    if len(sides) != arity:
        raise InvalidParams(f"{shape} takes {arity} sides.")
    return formula(*sides)


# Correlation sums.


def sum_vertical(n: int, m: int, k: int) -> ExactRational:
    """Sum over s <= m of B(s) D(s)."""
    return sum((coefficient_b(n, k, s) * coefficient_d(n, k, s) for s in range(1, m + 1)), Fraction(0))


def sum_upper(n: int, m: int, k: int) -> ExactRational:
    """Sum over s <= m of B(s) E(s)."""
    return sum((coefficient_b(n, k, s) * coefficient_e(n, k, s) for s in range(1, m + 1)), Fraction(0))


def sum_lower(n: int, m: int, k: int) -> ExactRational:
    """Sum over s <= m of B'(s) D'(s)."""
    return sum(
        (coefficient_b_prime(n, k, s) * coefficient_d_prime(n, k, s) for s in range(1, m + 1)),
        Fraction(0),
    )


def count_holey(spec: ValidatedRegion) -> int:
    """
    Exact tiling count of a validated region from the enumeration formulas.

    Args:
        spec (ValidatedRegion): Output of ``regions.validate_region``.

    Returns:
        int: The number of tilings (weighted for the upper half).

    Raises:
        InvalidParams: If ``spec`` has not been validated.
        InternalMismatch: If a formula fails to produce a non-negative integer.
    """
    if not isinstance(spec, ValidatedRegion):
        raise InvalidParams("count_holey needs a ValidatedRegion.")
    logging.info("Received region: %s. Evaluating closed form.", spec)
    n, m, k = spec.n, spec.m, spec.k

    if spec.family is Family.PLAIN:
        return count_t(n, spec.b, spec.third_side)

    if spec.family is Family.VERTICAL:
        if spec.b_is_even:
            value = sum_vertical(n, m, k) * count_st(n, 2 * m)
        else:
            value = abs(coefficient_p_star(n, k, m)) * count_st(n, 2 * m - 1)
    elif spec.family is Family.LOWER:
        if spec.b_is_even:
            value = sum_lower(n, m, k) * count_tc(n, 2 * m)
        elif m == 1:
            value = Fraction(0)
        else:
            value = sum_lower(n + 1, m - 1, k) * count_tc(n + 1, 2 * m - 2)
    elif spec.family is Family.UPPER:
        if spec.b_is_even:
            value = sum_upper(n, m, k) * count_st(n, 2 * m)
        else:
            value = 2 * sum_upper(n - 1, m, k) * count_st(n - 1, 2 * m)
    elif spec.b_is_even:
        value = sum_lower(n, m, k) * sum_upper(n, m, k) * count_t(n, 2 * m, n)
    else:
        value = sum_upper(n - 1, m, k) * sum_lower(n + 1, m - 1, k) * count_t(n, 2 * m - 1, n)

    count = _integral(value, f"Count of {spec.family.value} ({n}, {spec.b}, {k})")
    if count < 0:
        raise InternalMismatch(f"Negative count {count} for {spec}.")
    return count
