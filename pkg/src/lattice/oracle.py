"""
Ground-truth weighted tiling counters for TriangularRegions.

Both counters read only the cell set, free cells and weights, never any
closed formula. A tiling covers every cell exactly once, either by a lozenge
(an adjacent pair, contributing its weight) or, for a free cell, by a lozenge
protruding across the free boundary (weight 1).
"""
import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from src.clients.settings_client import SettingsEnvLoader
from src.lattice.regions import Cell, TriangularRegion
from src.models.exceptions import FrontierTooWide, InvalidParams, TooLarge

BACKTRACK_LIMIT = 44

SCAN_ORDERS = {
    "column": lambda cell: (cell.x, cell.h, cell.o.value),
    "row": lambda cell: (cell.h, cell.x, cell.o.value),
}


def scan_order(region: TriangularRegion, order: str = "auto") -> List[Cell]:
    """
    Cells of ``region`` in scan order.

    Args:
        region (TriangularRegion): The region.
        order (str): ``"column"``, ``"row"`` or ``"auto"``; ``"auto"`` picks
            the order with the narrower frontier.

    Raises:
        InvalidParams: If ``order`` is unknown.
    """
    if order == "auto":
        candidates = [scan_order(region, name) for name in SCAN_ORDERS]
        return min(candidates, key=lambda cells: _transitions(region, cells)[1])
    if order not in SCAN_ORDERS:
        raise InvalidParams(f"Unknown scan order {order!r}.")
    return sorted(region.cells, key=SCAN_ORDERS[order])


def _transitions(region: TriangularRegion, cells: Sequence[Cell]) -> Tuple[List[List[Tuple[int, int]]], int]:
    """Per position, the (offset, weight) list of later neighbours, and the widest offset."""
    position = {cell: index for index, cell in enumerate(cells)}
    forward: List[List[Tuple[int, int]]] = []
    width = 0
    for index, cell in enumerate(cells):
        moves = []
        for other in region.adjacent_in_region(cell):
            offset = position[other] - index
            if offset > 0:
                moves.append((offset, region.weight(cell, other)))
                width = max(width, offset)
        forward.append(moves)
    return forward, width


def count_tilings_dp(region: TriangularRegion, order: str = "auto", max_frontier: Optional[int] = None) -> int:
    """
    Weighted tiling count by broken-profile dynamic programming.

    The state after position ``pos`` is a bitmask of already covered cells
    among the next positions; bit t stands for position ``pos + t``.

    Args:
        region (TriangularRegion): The region to count.
        order (str): Scan order name, see ``scan_order``.
        max_frontier (int): Widest admissible neighbour offset; defaults to
            the ``HOLEY_MAX_FRONTIER`` setting.

    Returns:
        int: The exact weighted number of tilings.

    Raises:
        FrontierTooWide: If some neighbour lies further ahead than allowed.
    """
    if max_frontier is None:
        max_frontier = SettingsEnvLoader().max_frontier
    cells = scan_order(region, order)
    forward, width = _transitions(region, cells)
    if width > max_frontier:
        raise FrontierTooWide(f"Frontier width {width} exceeds the limit {max_frontier}.")
    logging.info("Received region with %s cells. Running transfer DP, frontier %s.", len(cells), width)

    free = [cell in region.free_cells for cell in cells]
    states: Dict[int, int] = {0: 1}
    for index in range(len(cells)):
        following: Dict[int, int] = defaultdict(int)
        for mask, count in states.items():
            if mask & 1:
                following[mask >> 1] += count
                continue
            for offset, weight in forward[index]:
                bit = 1 << offset
                if not mask & bit:
                    following[(mask | bit) >> 1] += count * weight
            if free[index]:
                following[mask >> 1] += count
        states = following
        if not states:
            return 0
    return states.get(0, 0)


def count_tilings_backtrack(region: TriangularRegion) -> int:
    """
    Weighted tiling count by exhaustive placement.

    Raises:
        TooLarge: If the region has more than 44 cells.
    """
    if len(region) > BACKTRACK_LIMIT:
        raise TooLarge(f"Backtracking is limited to {BACKTRACK_LIMIT} cells, received {len(region)}.")
    cells = sorted(region.cells, key=SCAN_ORDERS["column"])

    def place(uncovered: frozenset) -> int:
        if not uncovered:
            return 1
        first = min(uncovered, key=SCAN_ORDERS["column"])
        rest = uncovered - {first}
        total = 0
        for other in region.adjacent_in_region(first):
            if other in rest:
                total += region.weight(first, other) * place(rest - {other})
        if first in region.free_cells:
            total += place(rest)
        return total

    return place(frozenset(cells))
