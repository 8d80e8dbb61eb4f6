"""
Acceptance suites run by ``verify``. Each suite walks every valid parameter
triple within the requested bounds and cross-checks two independent routes.
"""
import logging
from functools import partial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import pandas as pd

from src.analysis.hyperasym import correlation_finite, correlation_hypergeometric, transform_identities_check
from src.analysis.identities import check_all_recurrences, termwise_check
from src.enumeration.closed_forms import count_holey, count_st, count_tc
from src.enumeration.lu_factors import LUTarget, certify_lu
from src.lattice.oracle import count_tilings_dp
from src.lattice.regions import realize_cells, validate_region
from src.linalg.path_matrices import BParity, build_lgv_matrix, build_pfaffian_matrix, build_reduced_matrix
from src.linalg.skewlin import determinant, pfaffian
from src.models.exceptions import FrontierTooWide, HoleyTilingError
from src.models.validators import Family, Interaction, RegionSpec
from src.models.workers import SuiteThreadedWorker

SUMMARY_COLUMNS = ["suite", "cases", "failures", "skipped", "passed"]

Outcome = Tuple[int, int, int]


def triples(max_n: int, max_m: int, parity: BParity, lowest_k: int = 0) -> Iterator[Tuple[int, int, int]]:
    """Every (n, m, k) with n <= max_n, m <= max_m and n - k of the given parity."""
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for k in range(lowest_k, n + 1):
                if ((n - k) % 2 == 0) == (parity is BParity.EVEN):
                    yield n, m, k


def _region(family: Family, n: int, b: int, k: int):
    return validate_region(RegionSpec(family=family, n=n, b=b, k=k))


class _Tally:
    """Counts cases and failures for one suite."""

    def __init__(self, suite: str):
        self.__suite = suite
        self.cases = 0
        self.failures = 0
        self.skipped = 0

    def check(self, label: str, test: Callable[[], bool]):
        self.cases += 1
        try:
            passed = bool(test())
        except HoleyTilingError as error:
            logging.warning("Suite %s: %s raised %s.", self.__suite, label, error)
            passed = False
        if not passed:
            logging.warning("Suite %s: %s failed.", self.__suite, label)
            self.failures += 1

    def skip(self, label: str, reason: str):
        logging.info("Suite %s: skipping %s (%s).", self.__suite, label, reason)
        self.skipped += 1

    @property
    def outcome(self) -> Outcome:
        return self.cases, self.failures, self.skipped


def pfaffian_suite(max_n: int, max_m: int) -> Outcome:
    """
    Pf(F)^2 = det(F), |Pf| = |det| of the reduced matrix, and the reduced and
    path determinants count the halves.
    """
    tally = _Tally("pfaffian")
    for parity in BParity:
        for n, m, k in triples(max_n, max_m, parity):
            b = 2 * m if parity is BParity.EVEN else 2 * m - 1
            label = f"{parity.value} n={n}, m={m}, k={k}"

            def matrix_routes(n=n, m=m, k=k, b=b, parity=parity) -> bool:
                full = build_pfaffian_matrix(n, m, k, parity)
                value = pfaffian(full)
                reduced = determinant(build_reduced_matrix(n, m, k, parity))
                count = count_holey(_region(Family.VERTICAL, n, b, k))
                return value**2 == determinant(full) and abs(value) == abs(reduced) == count

            tally.check(label, matrix_routes)
            if parity is BParity.EVEN and k >= 2:

                def halves(n=n, m=m, k=k) -> bool:
                    lower = count_holey(_region(Family.LOWER, n, 2 * m, k))
                    upper = count_holey(_region(Family.UPPER, n, 2 * m, k))
                    return (
                        abs(determinant(build_lgv_matrix(n, m, k, False))) == lower
                        and abs(determinant(build_lgv_matrix(n, m, k, True))) == upper
                    )

                tally.check(f"halves {label}", halves)
    return tally.outcome


def lu_suite(max_n: int, max_m: int) -> Outcome:
    """L * U equals its target entrywise for all four factorizations."""
    tally = _Tally("lu")
    for target in LUTarget:
        parity = BParity.ODD if target is LUTarget.FSTARHAT else BParity.EVEN
        lowest = 2 if target in (LUTarget.G, LUTarget.GPLUS) else 0
        for n, m, k in triples(max_n, max_m, parity, lowest):
            tally.check(f"{target.value} n={n}, m={m}, k={k}", partial(certify_lu, target, n, m, k))
    return tally.outcome


def oracle_suite(max_n: int, max_m: int, max_frontier: Optional[int] = None) -> Outcome:
    """Closed forms against the transfer DP for every family and b <= 2 max_m."""
    tally = _Tally("oracle")
    for n in range(1, max_n + 1):
        for b in range(1, 2 * max_m + 1):
            for family in (Family.HOLEY, Family.VERTICAL, Family.LOWER, Family.UPPER):
                for k in range(0, n + 1):
                    try:
                        spec = _region(family, n, b, k)
                    except HoleyTilingError:
                        continue
                    label = f"{family.value} n={n}, b={b}, k={k}"
                    try:
                        oracle = count_tilings_dp(realize_cells(spec), max_frontier=max_frontier)
                    except FrontierTooWide as error:
                        tally.skip(label, str(error))
                        continue
                    tally.check(label, lambda spec=spec, oracle=oracle: count_holey(spec) == oracle)
    return tally.outcome


def factorization_suite(max_n: int, max_m: int) -> Outcome:
    """
    The holey hexagon factors into its halves, and the finite correlations
    times their backgrounds give the counts, by the sums and by the series.
    """
    tally = _Tally("factorization")
    for n, m, k in triples(max_n, max_m, BParity.EVEN, lowest_k=2):
        label = f"n={n}, m={m}, k={k}"
        tally.check(
            f"halves {label}",
            lambda n=n, m=m, k=k: count_holey(_region(Family.HOLEY, n, 2 * m, k))
            == count_holey(_region(Family.LOWER, n, 2 * m, k)) * count_holey(_region(Family.UPPER, n, 2 * m, k)),
        )
        backgrounds = {
            Interaction.V: (Family.VERTICAL, count_st),
            Interaction.HPLUS: (Family.UPPER, count_st),
            Interaction.HMINUS: (Family.LOWER, count_tc),
        }
        for which, (family, background) in backgrounds.items():
            tally.check(
                f"{which.value} tie {label}",
                lambda which=which, family=family, background=background, n=n, m=m, k=k: (
                    correlation_finite(which, n, m, k) * background(n, 2 * m)
                    == count_holey(_region(family, n, 2 * m, k))
                ),
            )
            tally.check(
                f"{which.value} series {label}",
                lambda which=which, n=n, m=m, k=k: correlation_hypergeometric(which, n, m, k)
                == correlation_finite(which, n, m, k),
            )
    return tally.outcome


def identities_suite(max_n: int, max_m: int) -> Outcome:
    """Recurrences, termwise identities and series transformations."""
    tally = _Tally("identities")
    if max_n < 1 or max_m < 1:
        return tally.outcome
    frames = [
        check_all_recurrences(max_n=max_n, max_index=max_m),
        termwise_check(max_n=max_n, max_index=max_m),
        transform_identities_check().rename(columns={"identity": "name"}),
    ]
    for frame in frames:
        for row in frame.itertuples(index=False):
            tally.check(f"{row.name}", lambda holds=row.holds: holds)
    return tally.outcome


SUITES: Dict[str, Callable[[int, int], Outcome]] = {
    "pfaffian": pfaffian_suite,
    "lu": lu_suite,
    "oracle": oracle_suite,
    "factorization": factorization_suite,
    "identities": identities_suite,
}


def run_suites(max_n: int, max_m: int, suites: Optional[List[str]] = None, max_workers: Optional[int] = None) -> pd.DataFrame:
    """
    Run the selected suites side by side.

    Args:
        max_n (int): Largest n.
        max_m (int): Largest m.
        suites (List[str]): Suite names; all of them when omitted.
        max_workers (int): Thread pool size.

    Returns:
        pd.DataFrame: One row per suite with columns suite, cases, failures,
            skipped, passed, in the order requested.
    """
    names = list(SUITES) if suites is None else list(suites)
    logging.info("Received suites: %s. Running up to n=%s, m=%s.", names, max_n, max_m)
    jobs = {name: partial(SUITES[name], max_n, max_m) for name in names}
    outcomes = SuiteThreadedWorker(jobs, max_workers=max_workers).run_threaded_tasks() if jobs else {}
    rows = []
    for name in names:
        cases, failures, skipped = outcomes[name]
        rows.append({"suite": name, "cases": cases, "failures": failures, "skipped": skipped, "passed": failures == 0})
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
