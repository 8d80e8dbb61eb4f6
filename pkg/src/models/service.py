"""
Service class offering counting, correlation, asymptotics and verification
behind one interface.
"""
import logging
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import pandas as pd

from src.analysis.hyperasym import adjudicate, asymptote_table, convergence_report, correlation_limit
from src.clients.cache_client import ResultCacheClient
from src.clients.settings_client import SettingsEnvLoader
from src.enumeration.closed_forms import count_holey
from src.exact.exactnum import ExactMatrix, as_integer, binomial
from src.lattice.oracle import count_tilings_dp
from src.lattice.regions import realize_cells, validate_region
from src.linalg.path_matrices import BParity, build_lgv_matrix, build_reduced_matrix
from src.linalg.skewlin import determinant
from src.models.validators import (
    CorrelationRequest,
    CorrelationResult,
    CountRequest,
    CountResult,
    Family,
    Interaction,
    Method,
    ValidatedRegion,
    VerifyRequest,
    parse_fraction,
)
from src.models.verification import run_suites
from src.models.workers import reraise_cause

ROUTES = (Method.FORMULA, Method.MATRIX, Method.ORACLE)


def _absolute_count(matrix: ExactMatrix) -> int:
    return abs(as_integer(determinant(matrix)))


def _lower_by_matrix(n: int, b: int, k: int) -> int:
    m = (b + 1) // 2
    if b % 2 == 0:
        return _absolute_count(build_lgv_matrix(n, m, k, weighted=False))
    # A forced row of rhombi turns (n, 2m - 1) into (n + 1, 2m - 2).
    return _lower_by_matrix(n + 1, b - 1, k) if m > 1 else 0


def _upper_by_matrix(n: int, b: int, k: int) -> int:
    m = (b + 1) // 2
    if b % 2 == 0:
        return _absolute_count(build_lgv_matrix(n, m, k, weighted=True))
    return 2 * _upper_by_matrix(n - 1, b + 1, k)


def count_by_matrix(spec: ValidatedRegion) -> int:
    """
    Count a region as the determinant of a path matrix.

    The plain hexagon uses the binomial path matrix of side n; the holey
    families use the reduced Pfaffian matrix or the path matrices of the
    halves.
    """
    n, b, k, m = spec.n, spec.b, spec.k, spec.m
    if spec.family is Family.PLAIN:
        c = spec.third_side
        return _absolute_count(ExactMatrix.from_function(n, n, lambda i, j: binomial(b + c, b - i + j)))
    if spec.family is Family.VERTICAL:
        parity = BParity.EVEN if spec.b_is_even else BParity.ODD
        return _absolute_count(build_reduced_matrix(n, m, k, parity))
    if spec.family is Family.LOWER:
        return _lower_by_matrix(n, b, k)
    if spec.family is Family.UPPER:
        return _upper_by_matrix(n, b, k)
    return _lower_by_matrix(n, b, k) * _upper_by_matrix(n, b, k)


class Service:
    """
    Service class for counting tilings of holey hexagons and evaluating their
    correlation functions.

    Args:
        settings (SettingsEnvLoader): Runtime settings; loaded from the
            environment when omitted.
        verbose (bool): Log at INFO regardless of the configured level.
    """

    def __init__(self, settings: Optional[SettingsEnvLoader] = None, verbose: bool = False):
        self.__settings = settings if settings is not None else SettingsEnvLoader()
        level = logging.INFO if verbose else getattr(logging, self.__settings.log_level, logging.ERROR)
        logging.basicConfig(level=level)
        logging.getLogger().setLevel(level)
        cache_dir = self.__settings.cache_dir
        self.__cache = ResultCacheClient(cache_dir) if cache_dir is not None else None

    @property
    def cache(self) -> Optional[ResultCacheClient]:
        return self.__cache

    @lru_cache(maxsize=256)
    def __route_count(self, spec: ValidatedRegion, method: Method) -> int:
        # Cache keys carry no third side, so plain hexagons are never cached.
        cache = self.__cache if spec.family is not Family.PLAIN else None
        if cache is not None:
            cached = cache.get(spec.family, spec.n, spec.b, spec.k, method)
            if cached is not None:
                logging.info("Cache hit for %s by %s.", spec, method.value)
                return cached
        if method is Method.FORMULA:
            value = count_holey(spec)
        elif method is Method.MATRIX:
            value = count_by_matrix(spec)
        else:
            value = count_tilings_dp(realize_cells(spec), max_frontier=self.__settings.max_frontier)
        if cache is not None:
            cache.put(spec.family, spec.n, spec.b, spec.k, method, value)
        return value

    def count(self, request: CountRequest) -> CountResult:
        """
        Count the tilings of a region by one route or by all three.

        Args:
            request (CountRequest): The region and the route.

        Returns:
            CountResult: The counts, with a MATCH/MISMATCH verdict when all
                routes ran.

        Raises:
            ParityViolation, HoleOutOfRange, InvalidParams: If the region is
                invalid.
            FrontierTooWide: If the oracle route is asked for too wide a region.
        """
        spec = validate_region(request.region)
        methods = ROUTES if request.method is Method.ALL else (request.method,)
        counts = {method: self.__route_count(spec, method) for method in methods}
        verdict = None
        if request.method is Method.ALL:
            verdict = "MATCH" if len(set(counts.values())) == 1 else "MISMATCH"
            if verdict == "MISMATCH":
                logging.warning("Routes disagree on %s: %s.", spec, counts)
        return CountResult(region=request.region, counts=counts, verdict=verdict)

    def correlate(self, request: CorrelationRequest) -> Tuple[CorrelationResult, Optional[pd.DataFrame]]:
        """
        Limit correlation and, for a non-empty grid, the finite-n convergence
        report. With a report, ``adjudicated`` records the candidate the
        largest n favours.

        Raises:
            KTooSmall: If k < 2.
            InvalidParams: If a grid point is invalid.
        """
        result = correlation_limit(request.which, request.k, request.xi)
        if not request.n_grid:
            return result, None
        report = convergence_report(
            request.which, request.k, request.xi, request.n_grid, max_workers=self.__settings.workers
        )
        return result.model_copy(update={"adjudicated": adjudicate(report)}), report

    def asymptote(self, which: Interaction, xi, k_list: Sequence[int]) -> pd.DataFrame:
        """Limit, asymptote and ratio for each k."""
        return asymptote_table(which, parse_fraction(xi), list(k_list), max_workers=self.__settings.workers)

    def verify(self, request: VerifyRequest) -> pd.DataFrame:
        """
        Run the acceptance suites.

        Returns:
            pd.DataFrame: The per-suite summary.
        """
        try:
            return run_suites(request.max_n, request.max_m, request.suites, max_workers=self.__settings.workers)
        except RuntimeError as error:
            reraise_cause(error)

    @staticmethod
    def suites_passed(summary: pd.DataFrame) -> bool:
        return bool(summary["passed"].all()) if not summary.empty else True
