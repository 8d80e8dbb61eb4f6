"""
Pydantic models validating requests and carrying results across the package.
"""
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Family(str, Enum):
    """
    Region families. Values double as CLI names.
    """

    PLAIN = "plain"
    HOLEY = "hexagon"
    VERTICAL = "vertical"
    LOWER = "lower"
    UPPER = "upper-weighted"


class Interaction(str, Enum):
    """
    Hole interactions with a correlation function.
    """

    V = "V"
    HMINUS = "Hminus"
    HPLUS = "Hplus"
    H = "H"


class Method(str, Enum):
    """
    Counting routes.
    """

    FORMULA = "formula"
    MATRIX = "matrix"
    ORACLE = "oracle"
    ALL = "all"


def parse_fraction(value) -> Fraction:
    """Read an int, a float, a string such as "3/2" or a Fraction as a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


class RegionSpec(BaseModel):
    """
    Symbolic description of a region.

    Attributes:
        family (Family): The region family.
        n (int): Side a of the hexagon.
        b (int): Side b of the hexagon.
        k (int): Hole distance parameter, ignored by the plain family.
        c (Optional[int]): Third side of a plain hexagon; defaults to ``n``.
    """

    model_config = ConfigDict(frozen=True)

    family: Family
    n: int = Field(ge=1)
    b: int = Field(ge=1)
    k: int = 0
    c: Optional[int] = Field(default=None, ge=1)


class ValidatedRegion(RegionSpec):
    """
    A RegionSpec that passed ``regions.validate_region``.
    """

    @property
    def m(self) -> int:
        """Half of b, rounded up: b = 2m or b = 2m - 1."""
        return (self.b + 1) // 2

    @property
    def b_is_even(self) -> bool:
        return self.b % 2 == 0

    @property
    def third_side(self) -> int:
        return self.c if self.c is not None else self.n


class CountRequest(BaseModel):
    """
    Arguments of a counting request.
    """

    model_config = ConfigDict(frozen=True)

    region: RegionSpec
    method: Method = Method.FORMULA


class CorrelationRequest(BaseModel):
    """
    Arguments of a correlation request.

    Attributes:
        which (Interaction): The interaction.
        k (int): Hole distance.
        xi (Fraction): Aspect ratio, b ~ xi * a.
        n_grid (List[int]): Sizes for the finite-n convergence table.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    which: Interaction
    k: int = Field(ge=0)
    xi: Fraction
    n_grid: List[int] = Field(default_factory=list)

    @field_validator("xi", mode="before")
    @classmethod
    def _coerce_xi(cls, value):
        xi = parse_fraction(value)
        if xi <= 0:
            raise ValueError("xi must be positive.")
        return xi

    @field_validator("n_grid")
    @classmethod
    def _check_grid(cls, value):
        if any(n < 1 for n in value):
            raise ValueError("Grid sizes must be positive.")
        return value


class VerifyRequest(BaseModel):
    """
    Arguments of a verification run.
    """

    model_config = ConfigDict(frozen=True)

    max_n: int = Field(ge=0)
    max_m: int = Field(ge=0)
    suites: List[str]

    @field_validator("suites")
    @classmethod
    def _check_suites(cls, value):
        from src.models.verification import SUITES

        unknown = sorted(set(value) - set(SUITES))
        if unknown:
            raise ValueError(f"Unknown suites: {', '.join(unknown)}.")
        return value


class CorrelationResult(BaseModel):
    """
    Limit value of a correlation function with its asymptotic comparator.

    The limit is ``exact_value * factor`` where ``factor`` is the transcendental
    multiplier named by ``factor_label``.

    Attributes:
        which (Interaction): The interaction.
        k (int): Hole distance.
        xi (Fraction): Aspect ratio.
        exact_value (Optional[Fraction]): Rational coefficient of the limit.
        factor_label (str): The transcendental multiplier of ``exact_value``.
        float_value (float): Limit value, without the factor e.
        float_value_with_e (float): Limit value divided by e.
        asymptote (float): Large-k asymptotic expression.
        ratio (Optional[float]): ``float_value / asymptote``.
        adjudicated (str): The candidate normalization in force.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    which: Interaction
    k: int
    xi: Fraction
    exact_value: Optional[Fraction] = None
    factor_label: str
    float_value: float
    float_value_with_e: float
    asymptote: float
    ratio: Optional[float] = None
    adjudicated: str = "without_e"


class CountResult(BaseModel):
    """
    Tiling counts of one region by one or more routes.

    Attributes:
        region (RegionSpec): The counted region.
        counts (Dict[Method, int]): Count per route, in the order computed.
        verdict (Optional[str]): ``"MATCH"`` or ``"MISMATCH"`` when several
            routes ran.
    """

    model_config = ConfigDict(frozen=True)

    region: RegionSpec
    counts: Dict[Method, int]
    verdict: Optional[str] = None
