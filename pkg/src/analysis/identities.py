"""
Summation identities behind the closed-form LU factors and the recurrences
satisfied by both of their sides, checked exactly at sample points.

A recurrence of order r for a sequence S(index) reads
sum over t <= r of c_t(index) * S(index + t) = 0. Both the running sum and the
closed right-hand side must satisfy it, and they must agree pointwise.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict

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
)
from src.exact.exactnum import ExactRational, binomial, half
from src.models.exceptions import InvalidParams

Point = Dict[str, int]
RESULT_COLUMNS = ["name", "point", "lhs_residual", "rhs_residual", "sides_agree", "holds"]


class Recurrence(BaseModel):
    """
    A linear recurrence in ``index`` together with the identity it certifies.

    Attributes:
        name (str): Short identifier.
        coefficients (Tuple[Callable, ...]): c_0 .. c_r, called with the point
            as keyword arguments.
        lhs (Callable): The running sum, called with the point.
        rhs (Callable): The closed form, called with the point.
        domain (Callable): ``domain(max_n, max_index)`` yields the sample points.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    coefficients: Tuple[Callable[..., ExactRational], ...]
    lhs: Callable[..., ExactRational]
    rhs: Callable[..., ExactRational]
    domain: Callable[[int, int], Iterator[Point]]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def residual(self, sequence: Callable[..., ExactRational], point: Point) -> ExactRational:
        """Left side of the recurrence applied to ``sequence`` at ``point``."""
        total = Fraction(0)
        for shift, coefficient in enumerate(self.coefficients):
            shifted = dict(point, index=point["index"] + shift)
            total += coefficient(**point) * sequence(**shifted)
        return total


# Sample domains.


def _even_pairs(max_n: int, lowest_k: int, below_n: bool = False) -> Iterator[Tuple[int, int]]:
    for n in range(1, max_n + 1):
        for k in range(lowest_k, n + (0 if below_n else 1)):
            if (n - k) % 2 == 0:
                yield n, k


def _odd_pairs(max_n: int) -> Iterator[Tuple[int, int]]:
    for n in range(1, max_n + 1):
        for k in range(0, n + 1):
            if (n - k) % 2:
                yield n, k


def _index_and_column(max_n: int, max_index: int, order: int) -> Iterator[Point]:
    for n in range(1, max_n + 1):
        for j in range(1 + order, max_index + order + 1):
            for i in range(1, j - order + 1):
                yield {"n": n, "j": j, "index": i}


def _pair_domain(pairs: Callable[[int], Iterator[Tuple[int, int]]]) -> Callable[[int, int], Iterator[Point]]:
    def domain(max_n: int, max_index: int) -> Iterator[Point]:
        for n, k in pairs(max_n):
            for index in range(1, max_index + 1):
                yield {"n": n, "k": k, "index": index}

    return domain


def _running_sum(term: Callable[[int], ExactRational], upper: int) -> ExactRational:
    return sum((term(s) for s in range(1, upper + 1)), Fraction(0))


# Three-term recurrence shared by the two block identities; both binomial
# combinations C(2n, n+i-j) +- C(2n, n-i-j+1) satisfy it.

BLOCK_COEFFICIENTS = (
    lambda n, j, index: Fraction((j + n - index) * (index + j - n - 1)),
    lambda n, j, index: Fraction(-2 * (index**2 + index - j**2 + j - n**2 - n)),
    lambda n, j, index: Fraction(-(index + j + n + 1) * (index - j + n + 2)),
)

# First-order recurrence of C(n-k+1, (n-k)/2 + index).

BORDER_COEFFICIENTS = (
    lambda n, k, index: Fraction(index - half(n - k) - 1),
    lambda n, k, index: Fraction(index + half(n - k) + 1),
)


def _vertical_border_rhs(n: int, k: int, index: int) -> ExactRational:
    h = half(n - k)
    return (Fraction(4 * (index - 1), k - n) + Fraction(2 * index - 1, index + h)) * binomial(n - k, h - index + 1)


def _odd_lower_rhs(n: int, k: int, index: int) -> ExactRational:
    width = n - k + 1
    return Fraction(2 * index, width) * binomial(width, half(width) - index) - Fraction(
        2 * (index - 1), width
    ) * binomial(width, half(n - k + 3) - index)


RECURRENCES: List[Recurrence] = [
    Recurrence(
        name="A C block",
        coefficients=BLOCK_COEFFICIENTS,
        lhs=lambda n, j, index: _running_sum(lambda s: coefficient_a(n, index, s) * coefficient_c(n, s, j), index),
        rhs=lambda n, j, index: Fraction(binomial(2 * n, n - index - j + 1) + binomial(2 * n, n + index - j)),
        domain=lambda max_n, max_index: _index_and_column(max_n, max_index, 2),
    ),
    Recurrence(
        name="A D border",
        coefficients=(
            lambda n, k, index: Fraction((index - half(n - k) - 1) * (2 * index**2 + 2 * index - half(n - k))),
            lambda n, k, index: Fraction((2 * index**2 - 2 * index - half(n - k)) * (index + half(n - k) + 1)),
        ),
        lhs=lambda n, k, index: _running_sum(
            lambda s: coefficient_a(n, index, s) * coefficient_d(n, k, s), index
        ),
        rhs=_vertical_border_rhs,
        domain=_pair_domain(lambda max_n: _even_pairs(max_n, 0, below_n=True)),
    ),
    Recurrence(
        name="B C row",
        coefficients=BORDER_COEFFICIENTS,
        lhs=lambda n, k, index: _running_sum(
            lambda s: coefficient_b(n, k, s) * coefficient_c(n, s, index), index
        ),
        rhs=lambda n, k, index: Fraction(binomial(n - k + 1, half(n - k) + index)),
        domain=_pair_domain(lambda max_n: _even_pairs(max_n, 0)),
    ),
    Recurrence(
        name="A E weighted border",
        coefficients=BORDER_COEFFICIENTS,
        lhs=lambda n, k, index: _running_sum(
            lambda s: coefficient_a(n, index, s) * coefficient_e(n, k, s), index
        ),
        rhs=lambda n, k, index: Fraction(binomial(n - k + 1, half(n - k) + index)),
        domain=_pair_domain(lambda max_n: _even_pairs(max_n, 2)),
    ),
    Recurrence(
        name="A D* phantom column",
        coefficients=(lambda n, index: Fraction(-1), lambda n, index: Fraction(1)),
        lhs=lambda n, index: _running_sum(lambda s: coefficient_a(n, index, s) * coefficient_d_star(n, s), index),
        rhs=lambda n, index: Fraction(2**n),
        domain=lambda max_n, max_index: (
            {"n": n, "index": index} for n in range(1, max_n + 1) for index in range(1, max_index + 1)
        ),
    ),
    Recurrence(
        name="A E* odd border",
        coefficients=(
            lambda n, k, index: Fraction(2 * index + k - n - 1),
            lambda n, k, index: Fraction(2 * index - k + n + 1),
        ),
        lhs=lambda n, k, index: _running_sum(
            lambda s: coefficient_a(n, index, s) * coefficient_e_star(n, k, s), index
        ),
        rhs=lambda n, k, index: Fraction(binomial(n - k, half(n - k + 1) - index)),
        domain=_pair_domain(_odd_pairs),
    ),
    Recurrence(
        name="B* C odd row",
        coefficients=(
            lambda n, k, index: Fraction((2 * index + k - n - 3) * (4 * index**2 + 4 * index + k - n - 1)),
            lambda n, k, index: Fraction((4 * index**2 - 4 * index + k - n - 1) * (2 * index - k + n + 3)),
        ),
        lhs=lambda n, k, index: _running_sum(
            lambda s: coefficient_b_star(n, k, s) * coefficient_c(n, s, index), index
        ),
        rhs=_odd_lower_rhs,
        domain=_pair_domain(_odd_pairs),
    ),
    Recurrence(
        name="A' C' block",
        coefficients=BLOCK_COEFFICIENTS,
        lhs=lambda n, j, index: _running_sum(
            lambda s: coefficient_a_prime(n, index, s) * coefficient_c_prime(n, s, j), index
        ),
        rhs=lambda n, j, index: Fraction(binomial(2 * n, n + j - index) - binomial(2 * n, n - j - index + 1)),
        domain=lambda max_n, max_index: _index_and_column(max_n, max_index, 2),
    ),
    Recurrence(
        name="A' D' border",
        coefficients=(
            lambda n, k, index: Fraction((2 * index + 1) * (2 * index + k - n - 2)),
            lambda n, k, index: Fraction((2 * index - 1) * (2 * index + n - k + 2)),
        ),
        lhs=lambda n, k, index: _running_sum(
            lambda s: coefficient_a_prime(n, index, s) * coefficient_d_prime(n, k, s), index
        ),
        rhs=lambda n, k, index: Fraction(
            binomial(n - k, half(n - k) + 1 - index) - binomial(n - k, half(n - k) - index)
        ),
        domain=_pair_domain(lambda max_n: _even_pairs(max_n, 2)),
    ),
]


def recurrence_by_name(name: str) -> Recurrence:
    """
    Raises:
        InvalidParams: If no recurrence has this name.
    """
    for recurrence in RECURRENCES:
        if recurrence.name == name:
            return recurrence
    raise InvalidParams(f"Unknown recurrence {name!r}.")


def check_recurrence(recurrence: Recurrence, points: List[Point]) -> pd.DataFrame:
    """
    Evaluate a recurrence on both sides of its identity at each point.

    Returns:
        pd.DataFrame: One row per point with the exact residuals (as strings),
            ``sides_agree`` for S(index) = closed form, and ``holds`` when both
            residuals vanish and the sides agree.
    """
    rows = []
    for point in points:
        lhs_residual = recurrence.residual(recurrence.lhs, point)
        rhs_residual = recurrence.residual(recurrence.rhs, point)
        sides_agree = recurrence.lhs(**point) == recurrence.rhs(**point)
        holds = lhs_residual == 0 and rhs_residual == 0 and sides_agree
        if not holds:
            logging.warning("Recurrence %s fails at %s.", recurrence.name, point)
        rows.append(
            {
                "name": recurrence.name,
                "point": ", ".join(f"{key}={value}" for key, value in point.items()),
                "lhs_residual": str(lhs_residual),
                "rhs_residual": str(rhs_residual),
                "sides_agree": sides_agree,
                "holds": holds,
            }
        )
    return pd.DataFrame(rows, columns=RESULT_COLUMNS)


def check_all_recurrences(max_n: int = 8, max_index: int = 4) -> pd.DataFrame:
    """Run every registered recurrence on its sample domain."""
    logging.info("Received bounds: n <= %s, index <= %s. Checking recurrences.", max_n, max_index)
    frames = [
        check_recurrence(recurrence, list(recurrence.domain(max_n, max_index))) for recurrence in RECURRENCES
    ]
    return pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(columns=RESULT_COLUMNS)


# Termwise identities between the coefficient families.

TERMWISE: Dict[str, Tuple[Callable[..., ExactRational], Callable[..., ExactRational], bool]] = {
    "A C symmetry": (
        lambda n, k, p, q: coefficient_a(n, p, q) * coefficient_c(n, p, q),
        lambda n, k, p, q: coefficient_a(n, q, p) * coefficient_c(n, q, p),
        False,
    ),
    "A' C' symmetry": (
        lambda n, k, p, q: coefficient_a_prime(n, p, q) * coefficient_c_prime(n, p, q),
        lambda n, k, p, q: coefficient_a_prime(n, q, p) * coefficient_c_prime(n, q, p),
        False,
    ),
    "A' D' = C' B'": (
        lambda n, k, p, q: coefficient_a_prime(n, p, q) * coefficient_d_prime(n, k, q),
        lambda n, k, p, q: coefficient_c_prime(n, q, p) * coefficient_b_prime(n, k, q),
        True,
    ),
    "A E = B C": (
        lambda n, k, p, q: coefficient_a(n, p, q) * coefficient_e(n, k, q),
        lambda n, k, p, q: coefficient_b(n, k, q) * coefficient_c(n, q, p),
        True,
    ),
}


def termwise_check(max_n: int = 8, max_index: int = 4, names: Optional[List[str]] = None) -> pd.DataFrame:
    """
    Check the termwise coefficient identities at every (n, k, p, q) in range.

    Returns:
        pd.DataFrame: Columns name, point, holds.
    """
    rows = []
    for name, (left, right, uses_k) in TERMWISE.items():
        if names is not None and name not in names:
            continue
        pairs = _even_pairs(max_n, 0) if uses_k else ((n, 0) for n in range(1, max_n + 1))
        for n, k in pairs:
            for p in range(1, max_index + 1):
                for q in range(1, max_index + 1):
                    holds = left(n, k, p, q) == right(n, k, p, q)
                    if not holds:
                        logging.warning("Termwise identity %s fails at n=%s, k=%s, p=%s, q=%s.", name, n, k, p, q)
                    rows.append({"name": name, "point": f"n={n}, k={k}, p={p}, q={q}", "holds": holds})
    return pd.DataFrame(rows, columns=["name", "point", "holds"])
