"""
    Tests for the transfer DP and backtracking tiling counters.
"""
import pytest

from src.lattice.oracle import count_tilings_backtrack, count_tilings_dp
from src.lattice.regions import Cell, Orientation, TriangularRegion, realize_cells, unholed, validate_region
from src.models.exceptions import FrontierTooWide, TooLarge
from src.models.validators import Family, RegionSpec


def region(family, n, b, k=0, c=None):
    return realize_cells(validate_region(RegionSpec(family=family, n=n, b=b, k=k, c=c)))


def small_corpus():
    """Every valid region of the five families with at most 44 cells and n, b <= 5."""
    corpus = []
    for a in range(1, 4):
        for b in range(1, 4):
            for c in range(1, 4):
                if 2 * (a * b + b * c + c * a) <= 44:
                    corpus.append(region(Family.PLAIN, a, b, c=c))
    for family in (Family.VERTICAL, Family.LOWER, Family.UPPER, Family.HOLEY):
        for n in range(1, 6):
            for b in range(1, 6):
                lowest = 0 if family is Family.VERTICAL else 2
                for k in range(lowest, n + 1):
                    if (n - k + b) % 2:
                        continue
                    cells = region(family, n, b, k)
                    if len(cells) <= 44:
                        corpus.append(cells)
    return corpus


class TestKnownCounts:
    """
    Hand-checked tiling counts of small regions.
    """

    def test_two_adjacent_cells(self):
        cells = [Cell(0, 0, Orientation.RIGHT), Cell(0, 1, Orientation.LEFT)]
        assert count_tilings_dp(TriangularRegion(cells)) == 1
        assert count_tilings_backtrack(TriangularRegion(cells)) == 1

    def test_odd_cell_count_without_free_cells(self):
        cells = [Cell(0, 0, Orientation.RIGHT), Cell(0, 1, Orientation.LEFT), Cell(0, 2, Orientation.RIGHT)]
        assert count_tilings_dp(TriangularRegion(cells)) == 0

    def test_unit_hexagon(self):
        hexagon = region(Family.PLAIN, 1, 1, c=1)
        assert count_tilings_dp(hexagon) == 2
        assert count_tilings_backtrack(hexagon) == 2

    def test_hexagon_two_two_two(self):
        hexagon = region(Family.PLAIN, 2, 2, c=2)
        assert count_tilings_backtrack(hexagon) == 20
        assert count_tilings_dp(hexagon) == 20

    @pytest.mark.parametrize(
        "family, n, b, k, expected",
        [
            (Family.VERTICAL, 2, 2, 2, 1),
            (Family.VERTICAL, 2, 2, 0, 3),
            (Family.VERTICAL, 2, 3, 1, 4),
            (Family.VERTICAL, 2, 1, 1, 0),
            (Family.VERTICAL, 3, 1, 0, 0),
            (Family.VERTICAL, 1, 3, 0, 2),
            (Family.LOWER, 2, 2, 2, 1),
            (Family.UPPER, 2, 2, 2, 1),
            (Family.UPPER, 3, 1, 2, 2),
            (Family.HOLEY, 3, 1, 2, 0),
            (Family.HOLEY, 2, 2, 2, 1),
        ],
    )
    def test_holey_regions(self, family, n, b, k, expected):
        cells = region(family, n, b, k)
        assert count_tilings_dp(cells) == expected
        assert count_tilings_backtrack(cells) == expected

    def test_unholed_halves(self):
        spec = validate_region(RegionSpec(family=Family.UPPER, n=2, b=2, k=2))
        assert count_tilings_dp(unholed(spec)) == 10
        upper = validate_region(RegionSpec(family=Family.UPPER, n=3, b=2, k=3))
        lower = validate_region(RegionSpec(family=Family.LOWER, n=3, b=2, k=3))
        assert count_tilings_dp(unholed(lower)) == 5
        assert count_tilings_dp(unholed(lower)) * count_tilings_dp(unholed(upper)) == 175


class TestCounterAgreement:
    """
    The transfer DP agrees with exhaustive backtracking on every region of
    the small corpus, whichever scan order it uses.
    """

    def test_corpus_is_large_enough(self):
        corpus = small_corpus()
        assert len(corpus) >= 30
        families = {bool(cells.free_cells) for cells in corpus}
        assert families == {True, False}

    def test_dp_matches_backtracking(self):
        for cells in small_corpus():
            assert count_tilings_dp(cells) == count_tilings_backtrack(cells)

    def test_scan_order_independence(self):
        for cells in small_corpus():
            assert count_tilings_dp(cells, order="column") == count_tilings_dp(cells, order="row")


class TestLimits:
    """
    Size guards of both counters.
    """

    def test_frontier_too_wide(self):
        with pytest.raises(FrontierTooWide):
            count_tilings_dp(region(Family.PLAIN, 3, 3, c=3), max_frontier=2)

    def test_backtracking_too_large(self):
        with pytest.raises(TooLarge):
            count_tilings_backtrack(region(Family.PLAIN, 3, 3, c=3))
