"""
Terminating hypergeometric series, the transformation and summation formulas
applied to them, and the correlation functions of the triangular holes.

Exact values are ``Fraction``s. Only the transcendental multipliers
(pi, square roots, e) go through ``mpmath``.
"""
import logging
import math
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import mpmath
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.enumeration.closed_forms import coefficient_a, coefficient_d_star, sum_lower, sum_upper, sum_vertical
from src.exact.exactnum import ExactRational, factorial_quotient, half, pochhammer
from src.models.exceptions import (
    DenominatorPole,
    HoleyTilingError,
    InvalidParams,
    KTooSmall,
    NonTerminating,
    OutOfRadius,
)
from src.models.validators import CorrelationResult, Interaction, parse_fraction
from src.models.workers import GridThreadedWorker, reraise_cause

WORKING_DPS = 30
REPORT_COLUMNS = ["n", "m", "finite", "limit_e", "limit_noe", "ratio_e", "ratio_noe"]
ASYMPTOTE_COLUMNS = ["k", "limit", "asymptote", "ratio"]
FACTOR_LABELS = {
    Interaction.V: "sqrt(xi(xi+2))/pi",
    Interaction.HMINUS: "sqrt(xi(xi+2))/pi",
    Interaction.HPLUS: "sqrt(xi(xi+2))/pi",
    Interaction.H: "xi(xi+2)/pi^2",
}


class HyperSeries(BaseModel):
    """
    A generalized hypergeometric series pFq(a_1..a_p; b_1..b_q; z).

    Attributes:
        numerator_params (List[Fraction]): The a_i.
        denominator_params (List[Fraction]): The b_j.
        argument (Fraction): z.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    numerator_params: List[Fraction]
    denominator_params: List[Fraction] = Field(default_factory=list)
    argument: Fraction = Fraction(1)

    @field_validator("numerator_params", "denominator_params", mode="before")
    @classmethod
    def _coerce_params(cls, value):
        return [parse_fraction(param) for param in value]

    @field_validator("argument", mode="before")
    @classmethod
    def _coerce_argument(cls, value):
        return parse_fraction(value)

    @property
    def termination_index(self) -> Optional[int]:
        """Index of the last possibly non-zero term, or None if the series never stops."""
        stops = [-a.numerator for a in self.numerator_params if a.denominator == 1 and a <= 0]
        return min(stops) if stops else None

    def terms(self, count: int) -> Iterator[ExactRational]:
        """
        The first ``count`` terms.

        Raises:
            DenominatorPole: If a denominator parameter hits a non-positive
                integer before the requested term.
        """
        term = Fraction(1)
        for s in range(count):
            yield term
            if s + 1 == count:
                return
            for b in self.denominator_params:
                if b + s == 0:
                    raise DenominatorPole(f"Denominator parameter {b} vanishes at index {s + 1} in {self}.")
            for a in self.numerator_params:
                term *= a + s
            for b in self.denominator_params:
                term /= b + s
            term *= self.argument / (s + 1)


def _series(numerators: Sequence, denominators: Sequence, argument=1) -> HyperSeries:
    return HyperSeries(numerator_params=list(numerators), denominator_params=list(denominators), argument=argument)


def truncated_sum(series: HyperSeries, terms: int) -> ExactRational:
    """
    Sum of the first ``terms`` terms.

    This is the value an artificially terminated series takes once the
    regularizing parameter is sent to zero.
    """
    if terms < 0:
        raise InvalidParams(f"Cannot sum {terms} terms.")
    return sum(series.terms(terms), Fraction(0))


def hyper_terminating(series: HyperSeries) -> ExactRational:
    """
    Exact value of a terminating series.

    Raises:
        NonTerminating: If no numerator parameter is a non-positive integer.
        DenominatorPole: If a denominator parameter vanishes before termination.
    """
    last = series.termination_index
    if last is None:
        raise NonTerminating(f"No numerator parameter of {series} is a non-positive integer.")
    return truncated_sum(series, last + 1)


def evaluate_terminating(numerators: Sequence, denominators: Sequence, argument=1) -> ExactRational:
    """Shorthand for ``hyper_terminating`` on loose parameters."""
    return hyper_terminating(_series(numerators, denominators, argument))


def _mp(value: ExactRational) -> mpmath.mpf:
    value = parse_fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


def hyper_2f1_numeric(a, b, c, z, tol: float = 1e-15, max_terms: int = 100_000) -> float:
    """
    Floating value of 2F1(a, b; c; z) inside the unit disc.

    Terms are accumulated until the geometric bound on the remaining tail is
    at most ``tol``. Terminating inputs are summed exactly.

    Raises:
        OutOfRadius: If |z| >= 1.
        DenominatorPole: If c + s vanishes along the way.
        NonTerminating: If ``max_terms`` terms do not reach the tolerance.
    """
    series = _series([a, b], [c], z)
    a, b = series.numerator_params
    (c,) = series.denominator_params
    z = series.argument
    if abs(z) >= 1:
        raise OutOfRadius(f"2F1 is evaluated only for |z| < 1, received z={z}.")
    if series.termination_index is not None:
        return float(hyper_terminating(series))

    with mpmath.workdps(WORKING_DPS):
        total = mpmath.mpf(0)
        term = mpmath.mpf(1)
        for s in range(max_terms):
            total += term
            if c + s == 0:
                raise DenominatorPole(f"Denominator parameter {c} vanishes at index {s + 1}.")
            ratio = _mp((a + s) * (b + s) / ((c + s) * (s + 1)) * z)
            term *= ratio
            bound = max(abs(ratio), abs(_mp(z)))
            if bound < 1 and abs(term) / (1 - bound) <= tol:
                return float(total)
    raise NonTerminating(f"2F1({a}, {b}; {c}; {z}) did not reach tolerance {tol} in {max_terms} terms.")


# Correlation functions.


def _check_finite(which: Interaction, n: int, m: int, k: int):
    if n < 1 or m < 1 or not 0 <= k <= n:
        raise InvalidParams(f"Need n, m >= 1 and 0 <= k <= n, received n={n}, m={m}, k={k}.")
    if (n - k) % 2:
        raise InvalidParams(f"Correlation sums need n and k of equal parity, received n={n}, k={k}.")
    if which is not Interaction.V and k < 2:
        raise InvalidParams(f"{which.value} has two holes and needs k >= 2, received k={k}.")


def correlation_finite(which: Interaction, n: int, m: int, k: int) -> ExactRational:
    """
    Exact finite-size correlation: the region count over its hole-free background.

    Args:
        which (Interaction): V (sum of B D), Hplus (B E), Hminus (B' D') or H
            (the product of the last two).
        n (int): Side a.
        m (int): b = 2m.
        k (int): Hole distance, of the parity of n.

    Raises:
        InvalidParams: On invalid or parity-inconsistent parameters.
    """
    which = Interaction(which)
    _check_finite(which, n, m, k)
    if which is Interaction.V:
        return sum_vertical(n, m, k)
    if which is Interaction.HPLUS:
        return sum_upper(n, m, k)
    if which is Interaction.HMINUS:
        return sum_lower(n, m, k)
    return sum_lower(n, m, k) * sum_upper(n, m, k)


def _upper_series_form(n: int, m: int, k: int) -> ExactRational:
    h = half(n - k)
    prefactor = factorial_quotient(
        [2 * m - 1, n - k + 1, n - k + 1, m + n, m + n - 1],
        [m - 1, m - 1, h, h, h + 1, h + 1, 2 * m + 2 * n - 1],
    )
    return prefactor * evaluate_terminating(
        [2 - k, Fraction(1, 2), m + n + 1, 1 - m], [Fraction(n - k + 4, 2), Fraction(n - k + 4, 2), Fraction(3, 2)]
    )


def _lower_series_form(n: int, m: int, k: int) -> ExactRational:
    h = half(n - k)
    prefactor = factorial_quotient(
        [2 * m + 1, n - k, n - k, m + n - 2, m + n],
        [m - 1, m, h, h, h + 1, h + 1, 2 * m + 2 * n - 3],
        coefficient=Fraction(1, 12),
    )
    return prefactor * evaluate_terminating(
        [2 - k, Fraction(3, 2), m + n + 1, 1 - m], [Fraction(n - k + 4, 2), Fraction(n - k + 4, 2), Fraction(5, 2)]
    )


def _vertical_series_form(n: int, m: int, k: int) -> ExactRational:
    h = half(n - k)
    first = factorial_quotient(
        [n - k, n - k + 1, n + m, 2 * m - 1, n + m - 1],
        [h, h, h + 1, h + 1, m - 1, m - 1, 2 * n + 2 * m - 1],
    ) * evaluate_terminating(
        [2 - k, Fraction(1, 2), m + n + 1, 1 - m], [Fraction(n - k + 4, 2), Fraction(n - k + 4, 2), Fraction(3, 2)]
    )
    second = factorial_quotient(
        [half(n + k), n - k, n - k + 1, 2 * m - 1, m + n - 1, m + n],
        [h, h, h + 2, h + 2, half(n + k) - 1, m - 2, m - 1, 2 * m + 2 * n - 1],
        coefficient=Fraction(2 * (m + n + 1), 3),
    )
    if second:
        second *= evaluate_terminating(
            [2 - k, Fraction(3, 2), m + n + 2, 2 - m],
            [Fraction(n - k + 6, 2), Fraction(n - k + 6, 2), Fraction(5, 2)],
        )
    return first + second


def correlation_hypergeometric(which: Interaction, n: int, m: int, k: int) -> ExactRational:
    """
    Finite-size correlation from the transformed terminating 4F3 forms.

    Agrees with ``correlation_finite`` exactly; the sum over s becomes a
    4F3(1) with at most k - 1 terms.

    Raises:
        InvalidParams: On invalid parameters, or k < 2.
    """
    which = Interaction(which)
    _check_finite(which, n, m, k)
    if k < 2:
        raise InvalidParams(f"The 4F3 forms terminate through 2 - k and need k >= 2, received k={k}.")
    logging.info("Received correlation %s at n=%s, m=%s, k=%s. Evaluating 4F3 forms.", which.value, n, m, k)
    if which is Interaction.V:
        return _vertical_series_form(n, m, k)
    if which is Interaction.HPLUS:
        return _upper_series_form(n, m, k)
    if which is Interaction.HMINUS:
        return _lower_series_form(n, m, k)
    return _lower_series_form(n, m, k) * _upper_series_form(n, m, k)


def _check_limit_params(k: int, xi: Fraction):
    if k < 2:
        raise KTooSmall(f"Limit forms need k >= 2, received k={k}.")
    if xi <= 0:
        raise InvalidParams(f"xi must be positive, received {xi}.")


def _limit_core(which: Interaction, k: int, xi: Fraction) -> ExactRational:
    w = xi * (xi + 2)
    scale = Fraction(1, 4 ** (k - 1))
    if which in (Interaction.V, Interaction.HMINUS):
        return w * scale / 3 * evaluate_terminating([2 - k, Fraction(3, 2)], [Fraction(5, 2)], -w)
    if which is Interaction.HPLUS:
        return scale * evaluate_terminating([2 - k, Fraction(1, 2)], [Fraction(3, 2)], -w)
    return _limit_core(Interaction.HPLUS, k, xi) * _limit_core(Interaction.HMINUS, k, xi)


def _transcendental_factor(which: Interaction, xi: Fraction) -> mpmath.mpf:
    w = _mp(xi * (xi + 2))
    if which is Interaction.H:
        return w / mpmath.pi**2
    return mpmath.sqrt(w) / mpmath.pi


def correlation_limit(which: Interaction, k: int, xi) -> CorrelationResult:
    """
    Limit of the correlation as n grows with m ~ xi n / 2.

    The limit is ``exact_value`` times the factor named by ``factor_label``.
    ``float_value`` carries the normalization confirmed by finite-size
    convergence; ``float_value_with_e`` carries the alternative with an extra
    1/e per hole pair.

    Args:
        which (Interaction): The interaction.
        k (int): Hole distance, at least 2.
        xi: Positive aspect ratio (int, Fraction or string such as "3/2").

    Raises:
        KTooSmall: If k < 2.
        InvalidParams: If xi is not positive.
    """
    which = Interaction(which)
    xi = parse_fraction(xi)
    _check_limit_params(k, xi)
    logging.info("Received correlation %s at k=%s, xi=%s. Evaluating limit.", which.value, k, xi)

    exact = _limit_core(which, k, xi)
    with mpmath.workdps(WORKING_DPS):
        value = _mp(exact) * _transcendental_factor(which, xi)
        with_e = value / (mpmath.e**2 if which is Interaction.H else mpmath.e)
        float_value, float_value_with_e = float(value), float(with_e)
    comparator = asymptote(which, k, xi)
    return CorrelationResult(
        which=which,
        k=k,
        xi=xi,
        exact_value=exact,
        factor_label=FACTOR_LABELS[which],
        float_value=float_value,
        float_value_with_e=float_value_with_e,
        asymptote=comparator,
        ratio=float_value / comparator if comparator else None,
    )


def asymptote(which: Interaction, k: int, xi) -> float:
    """
    Large-k behaviour of the correlation.

    V and Hminus decay like sqrt(xi(xi+2)) / (2 pi k) * ((xi+1)/2)^(2k-2);
    Hplus like ((xi+1)/2)^(2k-2) / (2 pi k sqrt(xi(xi+2))); H is the square
    of ((xi+1)/2)^(2k-2) / (2 pi k).
    """
    which = Interaction(which)
    xi = parse_fraction(xi)
    if k < 1 or xi <= 0:
        raise InvalidParams(f"Asymptotes need k >= 1 and xi > 0, received k={k}, xi={xi}.")
    with mpmath.workdps(WORKING_DPS):
        growth = _mp(((xi + 1) / 2) ** (2 * k - 2))
        root = mpmath.sqrt(_mp(xi * (xi + 2)))
        if which in (Interaction.V, Interaction.HMINUS):
            value = root / (2 * mpmath.pi * k) * growth
        elif which is Interaction.HPLUS:
            value = growth / (2 * mpmath.pi * k * root)
        else:
            value = (growth / (2 * k * mpmath.pi)) ** 2
        return float(value)


# Transformation and summation formulas.


class Identity(str, Enum):
    """
    Identities checked by ``transform_identities_check``.
    """

    WHIPPLE = "7F6-to-4F3"
    INVERSION = "2F1-inversion"
    WELL_POISED = "4F3-minus-one"
    LIMIT_FORM = "limit-2F1"
    POWER_OF_TWO = "A-Dstar-sum"


def whipple_sides(a, b, c, d, e, n: int) -> Tuple[ExactRational, ExactRational]:
    """Both sides of the terminating very-well-poised 7F6 to balanced 4F3 transformation."""
    a, b, c, d, e = (parse_fraction(value) for value in (a, b, c, d, e))
    left = evaluate_terminating(
        [a, a / 2 + 1, b, c, d, e, -n],
        [a / 2, a - b + 1, a - c + 1, a - d + 1, a - e + 1, a + n + 1],
    )
    right = (
        pochhammer(a + 1, n)
        * pochhammer(a - d - e + 1, n)
        / (pochhammer(a - d + 1, n) * pochhammer(a - e + 1, n))
        * evaluate_terminating([a - b - c + 1, d, e, -n], [a - b + 1, a - c + 1, -a + d + e - n])
    )
    return left, right


def inversion_sides(n: int, a, c, z) -> Tuple[ExactRational, ExactRational]:
    """Both sides of 2F1(-n, a; c; z) = (1-z)^n (a)_n/(c)_n 2F1(-n, c-a; 1-a-n; 1/(1-z))."""
    a, c, z = (parse_fraction(value) for value in (a, c, z))
    left = evaluate_terminating([-n, a], [c], z)
    right = (
        (1 - z) ** n
        * pochhammer(a, n)
        / pochhammer(c, n)
        * evaluate_terminating([-n, c - a], [1 - a - n], 1 / (1 - z))
    )
    return left, right


def well_poised_sides(a, b, c) -> Tuple[ExactRational, ExactRational]:
    """
    Both sides of the very-well-poised 4F3(-1) summation.

    The gamma ratio Gamma(a-b+1)Gamma(a-c+1) / (Gamma(a+1)Gamma(a-b-c+1)) is
    evaluated through Pochhammer symbols, so b or c must be a non-positive
    integer.
    """
    a, b, c = (parse_fraction(value) for value in (a, b, c))
    if c.denominator == 1 and c <= 0:
        b, c = c, b
    if b.denominator != 1 or b > 0:
        raise NonTerminating(f"4F3(-1) summation needs b or c to be a non-positive integer, received {b}, {c}.")
    length = -b.numerator
    left = evaluate_terminating([a, a / 2 + 1, b, c], [a / 2, a - b + 1, a - c + 1], -1)
    right = pochhammer(a + 1, length) / pochhammer(a - c + 1, length)
    return left, right


def limit_form_sides(k: int, xi) -> Tuple[ExactRational, ExactRational]:
    """
    2F1(2-k, 3/2; 5/2; -xi(xi+2)) against its inverted form
    (xi+1)^(2k-4) 3/(2k-1) 2F1(2-k, 1; 3/2-k; (xi+1)^-2).
    """
    xi = parse_fraction(xi)
    left = evaluate_terminating([2 - k, Fraction(3, 2)], [Fraction(5, 2)], -xi * (xi + 2))
    right = (
        (xi + 1) ** (2 * k - 4)
        * Fraction(3, 2 * k - 1)
        * evaluate_terminating([2 - k, 1], [Fraction(3, 2) - k], (xi + 1) ** -2)
    )
    return left, right


def power_of_two_sides(n: int, i: int) -> Tuple[ExactRational, ExactRational]:
    """Sum over s <= i of A_n(i, s) D*_n(s), directly and as a 4F3(-1)."""
    left = sum((coefficient_a(n, i, s) * coefficient_d_star(n, s) for s in range(1, i + 1)), Fraction(0))
    prefactor = factorial_quotient([n, n], [n - i + 1, n + i], coefficient=2**n * (n + 1))
    right = prefactor * evaluate_terminating(
        [n + 1, Fraction(n + 3, 2), 1 - i, i], [Fraction(n + 1, 2), n + 1 + i, n - i + 2], -1
    )
    return left, right


IDENTITY_SIDES: Dict[Identity, Callable[..., Tuple[ExactRational, ExactRational]]] = {
    Identity.WHIPPLE: whipple_sides,
    Identity.INVERSION: inversion_sides,
    Identity.WELL_POISED: well_poised_sides,
    Identity.LIMIT_FORM: limit_form_sides,
    Identity.POWER_OF_TWO: power_of_two_sides,
}


def default_identity_samples() -> List[Tuple[Identity, tuple]]:
    """Terminating rational samples, at least twenty per transformation or summation formula."""
    samples: List[Tuple[Identity, tuple]] = []
    for a in (Fraction(7, 3), Fraction(5, 2)):
        for rest in (
            (Fraction(1, 5), Fraction(2, 7), Fraction(3, 4), Fraction(5, 6)),
            (Fraction(2, 5), Fraction(1, 7), Fraction(1, 4), Fraction(7, 6)),
        ):
            for n in range(1, 6):
                samples.append((Identity.WHIPPLE, (a, *rest, n)))
    for n in range(1, 6):
        for a, c in ((Fraction(1, 2), Fraction(5, 2)), (Fraction(1, 3), Fraction(7, 3))):
            for z in (Fraction(1, 2), Fraction(-3)):
                samples.append((Identity.INVERSION, (n, a, c, z)))
    for a in (Fraction(3), Fraction(7, 2), Fraction(5), Fraction(9, 4)):
        for length in range(1, 4):
            for c in (Fraction(1), Fraction(1, 3)):
                samples.append((Identity.WELL_POISED, (a, -length, c)))
    for k in range(2, 7):
        for xi in (Fraction(1), Fraction(1, 2), Fraction(3)):
            samples.append((Identity.LIMIT_FORM, (k, xi)))
    for n in range(1, 7):
        for i in range(1, min(3, n + 1) + 1):
            samples.append((Identity.POWER_OF_TWO, (n, i)))
    return samples


def transform_identities_check(samples: Optional[Iterable[Tuple[Identity, tuple]]] = None) -> pd.DataFrame:
    """
    Evaluate both sides of each sampled identity exactly.

    Args:
        samples: Pairs of (identity, arguments). Defaults to
            ``default_identity_samples()``.

    Returns:
        pd.DataFrame: Columns identity, parameters, lhs, rhs, holds, error.
            A sample that raises is recorded with ``holds`` False.
    """
    samples = default_identity_samples() if samples is None else list(samples)
    rows = []
    for identity, arguments in samples:
        identity = Identity(identity)
        row = {"identity": identity.value, "parameters": ", ".join(str(arg) for arg in arguments)}
        try:
            left, right = IDENTITY_SIDES[identity](*arguments)
            row.update(lhs=str(left), rhs=str(right), holds=left == right, error="")
        except HoleyTilingError as error:
            row.update(lhs="", rhs="", holds=False, error=str(error))
        if not row["holds"]:
            logging.warning("Identity %s fails at %s.", identity.value, row["parameters"])
        rows.append(row)
    return pd.DataFrame(rows, columns=["identity", "parameters", "lhs", "rhs", "holds", "error"])


def domination_bound_holds(k: int, xi) -> bool:
    """
    Each term of 2F1(2-k, 1; 3/2-k; (xi+1)^-2) is at most (xi+1)^(-2s).
    """
    xi = parse_fraction(xi)
    _check_limit_params(k, xi)
    series = _series([2 - k, 1], [Fraction(3, 2) - k], (xi + 1) ** -2)
    return all(term <= (xi + 1) ** (-2 * s) for s, term in enumerate(series.terms(k - 1)))


# Finite-size convergence.


def grid_point(n: int, k: int, xi: Fraction) -> Tuple[int, int]:
    """
    The (n, m) evaluated for a requested grid size: n moves up by one when its
    parity differs from k, and m is xi n / 2 rounded half up, at least 1.
    """
    if (n - k) % 2:
        n += 1
    return n, max(1, math.floor(xi * n / 2 + Fraction(1, 2)))


def _finite_point(n: int, which: Interaction, k: int, xi: Fraction) -> Tuple[int, int, float]:
    n, m = grid_point(n, k, xi)
    return n, m, float(correlation_finite(which, n, m, k))


def convergence_report(
    which: Interaction, k: int, xi, n_grid: Sequence[int], max_workers: Optional[int] = None
) -> pd.DataFrame:
    """
    Finite-size correlations along a grid of n against both limit candidates.

    Grid points are evaluated concurrently.

    Returns:
        pd.DataFrame: Columns n, m, finite, limit_e, limit_noe, ratio_e,
            ratio_noe, sorted by n. ``attrs["monotone_noe"]`` is True when
            |ratio_noe - 1| never grows along the grid.

    Raises:
        KTooSmall: If k < 2.
        InvalidParams: If a grid point is invalid for the interaction.
    """
    which = Interaction(which)
    xi = parse_fraction(xi)
    limit = correlation_limit(which, k, xi)
    logging.info("Received grid: %s. Building convergence report for %s.", list(n_grid), which.value)
    try:
        points = GridThreadedWorker(
            _finite_point, n_grid, max_workers=max_workers, which=which, k=k, xi=xi
        ).run_threaded_tasks()
    except RuntimeError as error:
        reraise_cause(error)

    rows = [
        {
            "n": n,
            "m": m,
            "finite": finite,
            "limit_e": limit.float_value_with_e,
            "limit_noe": limit.float_value,
            "ratio_e": finite / limit.float_value_with_e,
            "ratio_noe": finite / limit.float_value,
        }
        for n, m, finite in sorted(points)
    ]
    report = pd.DataFrame(rows, columns=REPORT_COLUMNS)
    gaps = (report["ratio_noe"] - 1).abs().tolist()
    report.attrs["monotone_noe"] = all(later <= earlier for earlier, later in zip(gaps, gaps[1:]))
    return report


def adjudicate(report: pd.DataFrame) -> str:
    """
    The limit candidate whose ratio is closer to 1 at the largest n:
    ``"without_e"``, ``"with_e"`` or ``"undecided"`` for an empty report.
    """
    if report.empty:
        return "undecided"
    last = report.iloc[-1]
    return "without_e" if abs(last["ratio_noe"] - 1) <= abs(last["ratio_e"] - 1) else "with_e"


def _asymptote_row(k: int, which: Interaction, xi: Fraction) -> dict:
    result = correlation_limit(which, k, xi)
    return {"k": k, "limit": result.float_value, "asymptote": result.asymptote, "ratio": result.ratio}


def asymptote_table(which: Interaction, xi, k_list: Sequence[int], max_workers: Optional[int] = None) -> pd.DataFrame:
    """
    Exact limit, asymptote and their ratio for each k.

    Returns:
        pd.DataFrame: Columns k, limit, asymptote, ratio in the order of ``k_list``.
    """
    which = Interaction(which)
    xi = parse_fraction(xi)
    try:
        rows = GridThreadedWorker(
            _asymptote_row, k_list, max_workers=max_workers, which=which, xi=xi
        ).run_threaded_tasks()
    except RuntimeError as error:
        reraise_cause(error)
    return pd.DataFrame(rows, columns=ASYMPTOTE_COLUMNS)
