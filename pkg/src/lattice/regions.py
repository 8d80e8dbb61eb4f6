"""
Region families on the triangular lattice and their realization as cell sets.

Coordinates: vertical lattice lines sit at integer x, and a lattice point on
line x has a doubled height Y with Y = x + p (mod 2). A cell ``(x, h, o)``
lives in the strip between lines x and x+1, with h its doubled mid-height.

* ``R`` (right-pointing) has vertices (x, h-1), (x, h+1), (x+1, h).
* ``L`` (left-pointing) has vertices (x+1, h-1), (x+1, h+1), (x, h).

The hexagon H_{a,b} is centred at O = (0, 0). Its vertical sides of length b
sit at x = +-a. The hole ``▷_k`` has its vertical side on line x = -k, and
``◁_k`` is its mirror image.
"""
import logging
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from pydantic import ValidationError

from src.models.exceptions import HoleOutOfRange, InvalidParams, ParityViolation
from src.models.validators import Family, RegionSpec, ValidatedRegion

HOLE_FAMILIES = (Family.HOLEY, Family.LOWER, Family.UPPER)


class Orientation(str, Enum):
    LEFT = "L"
    RIGHT = "R"


class Cell(NamedTuple):
    x: int
    h: int
    o: Orientation


Pair = FrozenSet[Cell]


def vertices(cell: Cell) -> Tuple[Tuple[int, int], ...]:
    """Corner points (x, Y) of a unit triangle."""
    x, h, o = cell
    if o is Orientation.RIGHT:
        return (x, h - 1), (x, h + 1), (x + 1, h)
    return (x + 1, h - 1), (x + 1, h + 1), (x, h)


def neighbours(cell: Cell) -> Tuple[Cell, ...]:
    """The three edge-adjacent cells, whether or not they exist in a region."""
    x, h, o = cell
    if o is Orientation.RIGHT:
        return (
            Cell(x, h - 1, Orientation.LEFT),
            Cell(x, h + 1, Orientation.LEFT),
            Cell(x - 1, h, Orientation.LEFT),
        )
    return (
        Cell(x, h - 1, Orientation.RIGHT),
        Cell(x, h + 1, Orientation.RIGHT),
        Cell(x + 1, h, Orientation.RIGHT),
    )


def mirror(cell: Cell) -> Cell:
    """Reflection in the vertical line x = 0."""
    x, h, o = cell
    flipped = Orientation.LEFT if o is Orientation.RIGHT else Orientation.RIGHT
    return Cell(-x - 1, h, flipped)


def orientation_at(x: int, h: int, parity: int) -> Orientation:
    return Orientation.RIGHT if (h - x - parity - 1) % 2 == 0 else Orientation.LEFT


class TriangularRegion:
    """
    Concrete cell set with free-boundary cells and weighted lozenge positions.

    Args:
        cells (Iterable[Cell]): The unit triangles of the region.
        free_cells (Iterable[Cell]): Cells that may be covered by a lozenge
            protruding across the free boundary.
        weights (Dict[Pair, int]): Weight of each listed lozenge position;
            unlisted positions weigh 1.
        boundary (Optional[int]): The vertical line x carrying the free cells.

    Raises:
        InvalidParams: If a weighted pair is not adjacent, a free cell lies
            outside the region, or free cells are off the declared line.
    """

    def __init__(
        self,
        cells: Iterable[Cell],
        free_cells: Iterable[Cell] = (),
        weights: Optional[Dict[Pair, int]] = None,
        boundary: Optional[int] = None,
    ):
        self.__cells = frozenset(cells)
        self.__free_cells = frozenset(free_cells)
        self.__weights = dict(weights or {})
        self.__boundary = boundary
        self.__validate_input()

    @property
    def cells(self) -> FrozenSet[Cell]:
        return self.__cells

    @property
    def free_cells(self) -> FrozenSet[Cell]:
        return self.__free_cells

    @property
    def weights(self) -> Dict[Pair, int]:
        return dict(self.__weights)

    @property
    def boundary(self) -> Optional[int]:
        return self.__boundary

    def __len__(self) -> int:
        return len(self.__cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriangularRegion):
            return NotImplemented
        return (
            self.__cells == other.cells
            and self.__free_cells == other.free_cells
            and self.__weights == other.weights
            and self.__boundary == other.boundary
        )

    def weight(self, first: Cell, second: Cell) -> int:
        return self.__weights.get(frozenset((first, second)), 1)

    def adjacent_in_region(self, cell: Cell) -> List[Cell]:
        return [other for other in neighbours(cell) if other in self.__cells]

    def balance(self) -> Dict[str, int]:
        """Counts of left cells, right cells and free cells."""
        left = sum(1 for cell in self.__cells if cell.o is Orientation.LEFT)
        return {
            "left": left,
            "right": len(self.__cells) - left,
            "free": len(self.__free_cells),
        }

    def __validate_input(self):
        if not self.__free_cells <= self.__cells:
            raise InvalidParams("Free cells must belong to the region.")
        if self.__free_cells:
            if self.__boundary is None:
                raise InvalidParams("Free cells require a declared boundary line.")
            for cell in self.__free_cells:
                on_line = [point for point in vertices(cell) if point[0] == self.__boundary]
                if len(on_line) != 2:
                    raise InvalidParams(f"Free cell {cell} has no edge on line x={self.__boundary}.")
        for pair, value in self.__weights.items():
            first, second = tuple(pair)
            if second not in neighbours(first):
                raise InvalidParams(f"Weighted pair {sorted(pair)} is not adjacent.")
            if value < 1:
                raise InvalidParams("Lozenge weights must be positive integers.")


def validate_region(spec: RegionSpec) -> ValidatedRegion:
    """
    Check the hole range and the parity rule of a region spec.

    Args:
        spec (RegionSpec): The spec to check; a plain mapping is accepted too.

    Returns:
        ValidatedRegion: The same fields, tagged valid.

    Raises:
        InvalidParams: If the raw fields fail model validation.
        HoleOutOfRange: If k lies outside [0, n] ([2, n] for the two-hole
            families).
        ParityViolation: If b is even and k differs from n in parity, or b is
            odd and they agree.
    """
    try:
        if not isinstance(spec, RegionSpec):
            spec = RegionSpec.model_validate(spec)
    except ValidationError as error:
        raise InvalidParams(str(error)) from error

    logging.info("Received region: %s. Validating.", spec)
    if spec.family is not Family.PLAIN:
        lowest = 2 if spec.family in HOLE_FAMILIES else 0
        if not lowest <= spec.k <= spec.n:
            raise HoleOutOfRange(f"Hole distance k={spec.k} must lie in [{lowest}, {spec.n}].")
        if (spec.n - spec.k + spec.b) % 2:
            raise ParityViolation(
                f"n={spec.n}, b={spec.b} and k={spec.k} violate the parity rule: "
                "k must match n in parity when b is even and differ when b is odd."
            )
    return ValidatedRegion(**spec.model_dump())


def _inside_hexagon(point: Tuple[int, int], a: int, b: int) -> bool:
    x, y = point
    return abs(x) <= a and abs(y - x) <= a + b and abs(y + x) <= a + b


def _inside_plain(point: Tuple[int, int], a: int, b: int, c: int) -> bool:
    x, y = point
    return 0 <= x <= a + c and -2 * a <= y - x <= 2 * b and 0 <= y + x <= 2 * b + 2 * c


def hexagon_cells(a: int, b: int) -> FrozenSet[Cell]:
    """Cells of the centred hexagon H_{a,b}."""
    parity = (b - a) % 2
    found = set()
    for x in range(-a, a):
        for h in range(-(a + b) - 1, a + b + 2):
            cell = Cell(x, h, orientation_at(x, h, parity))
            if all(_inside_hexagon(point, a, b) for point in vertices(cell)):
                found.add(cell)
    return frozenset(found)


def plain_hexagon_cells(a: int, b: int, c: int) -> FrozenSet[Cell]:
    """Cells of the hexagon with sides a, b, c, a, b, c."""
    found = set()
    for x in range(0, a + c):
        for h in range(-2 * a - 1, 2 * b + 2 * c + 2):
            cell = Cell(x, h, orientation_at(x, h, 0))
            if all(_inside_plain(point, a, b, c) for point in vertices(cell)):
                found.add(cell)
    return frozenset(found)


def right_hole(k: int) -> FrozenSet[Cell]:
    """The side-2 triangle pointing right, vertical side on line x = -k."""
    return frozenset(
        (
            Cell(-k, -1, Orientation.RIGHT),
            Cell(-k, 1, Orientation.RIGHT),
            Cell(-k, 0, Orientation.LEFT),
            Cell(-k + 1, 0, Orientation.RIGHT),
        )
    )


def left_hole(k: int) -> FrozenSet[Cell]:
    """Mirror image of ``right_hole(k)``."""
    return frozenset(mirror(cell) for cell in right_hole(k))


def axis_pairs(cells: FrozenSet[Cell]) -> Dict[Pair, int]:
    """Weight-2 positions of the upper half: lozenges straddling the axis."""
    weights = {}
    for cell in cells:
        if cell.h == 0 and cell.o is Orientation.LEFT:
            partner = Cell(cell.x, 1, Orientation.RIGHT)
            if partner in cells:
                weights[frozenset((cell, partner))] = 2
    return weights


def realize_cells(spec: ValidatedRegion) -> TriangularRegion:
    """
    Realize a validated spec as a concrete cell set.

    * Plain hexagon: all cells.
    * Holey hexagon: the hexagon minus both holes.
    * Vertical half: the cells left of x = 0 minus ``▷_k``. The ``◁`` cells
      of strip -1 are free unless their mirror images lie in the hole.
    * Lower half: the cells with h <= -1 minus the holes.
    * Weighted upper half: the cells with h >= 0 minus the holes, with weight
      2 on the axis lozenges.

    Args:
        spec (ValidatedRegion): Output of ``validate_region``.

    Returns:
        TriangularRegion: The concrete region.
    """
    if not isinstance(spec, ValidatedRegion):
        spec = validate_region(spec)
    logging.info("Received region: %s. Realizing cells.", spec)

    if spec.family is Family.PLAIN:
        return TriangularRegion(plain_hexagon_cells(spec.n, spec.b, spec.third_side))

    hexagon = hexagon_cells(spec.n, spec.b)
    if spec.family is Family.VERTICAL:
        hole = right_hole(spec.k)
        cells = frozenset(cell for cell in hexagon if cell.x <= -1) - hole
        free = frozenset(
            cell
            for cell in cells
            if cell.x == -1 and cell.o is Orientation.LEFT and mirror(cell) not in hole
        )
        return TriangularRegion(cells, free_cells=free, boundary=0)

    holey = hexagon - right_hole(spec.k) - left_hole(spec.k)
    if spec.family is Family.HOLEY:
        return TriangularRegion(holey)
    if spec.family is Family.LOWER:
        return TriangularRegion(frozenset(cell for cell in holey if cell.h <= -1))
    upper = frozenset(cell for cell in holey if cell.h >= 0)
    return TriangularRegion(upper, weights=axis_pairs(upper))


def unholed(spec: ValidatedRegion) -> TriangularRegion:
    """
    The same family cut from the hexagon without holes. The vertical half gets
    a fully free boundary.
    """
    hexagon = hexagon_cells(spec.n, spec.b)
    if spec.family is Family.VERTICAL:
        cells = frozenset(cell for cell in hexagon if cell.x <= -1)
        free = frozenset(cell for cell in cells if cell.x == -1 and cell.o is Orientation.LEFT)
        return TriangularRegion(cells, free_cells=free, boundary=0)
    if spec.family is Family.LOWER:
        return TriangularRegion(frozenset(cell for cell in hexagon if cell.h <= -1))
    if spec.family is Family.UPPER:
        upper = frozenset(cell for cell in hexagon if cell.h >= 0)
        return TriangularRegion(upper, weights=axis_pairs(upper))
    return TriangularRegion(hexagon)
