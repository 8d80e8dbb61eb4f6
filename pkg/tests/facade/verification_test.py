"""
    Tests for the acceptance suites.
"""
from src.linalg.path_matrices import BParity
from src.models.verification import SUITES, factorization_suite, lu_suite, oracle_suite, run_suites, triples


class TestTriples:
    """
    Parameter enumeration.
    """

    def test_parities(self):
        even = list(triples(3, 1, BParity.EVEN))
        odd = list(triples(3, 1, BParity.ODD))
        assert even == [(1, 1, 1), (2, 1, 0), (2, 1, 2), (3, 1, 1), (3, 1, 3)]
        assert odd == [(1, 1, 0), (2, 1, 1), (3, 1, 0), (3, 1, 2)]

    def test_lowest_k(self):
        assert all(k >= 2 for _, _, k in triples(6, 2, BParity.EVEN, lowest_k=2))


class TestSuites:
    """
    Individual suites and the summary table.
    """

    def test_lu_suite_passes(self):
        cases, failures, skipped = lu_suite(5, 3)
        assert cases > 0
        assert failures == skipped == 0

    def test_factorization_suite_passes(self):
        cases, failures, _ = factorization_suite(5, 2)
        assert cases > 0
        assert failures == 0

    def test_oracle_suite_passes(self):
        cases, failures, skipped = SUITES["oracle"](3, 2)
        assert cases > 0
        assert failures == skipped == 0

    def test_oracle_skips_wide_regions(self):
        _, failures, skipped = oracle_suite(3, 2, max_frontier=1)
        assert failures == 0
        assert skipped > 0

    def test_summary_keeps_the_requested_order(self):
        summary = run_suites(2, 1, ["lu", "pfaffian"])
        assert summary["suite"].tolist() == ["lu", "pfaffian"]
        assert summary["passed"].all()

    def test_no_suites(self):
        assert run_suites(3, 2, []).empty
