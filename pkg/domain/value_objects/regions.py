"""
Region Value Objects
L-shaped regions, rectangles, adding-squares moves and lattice placements
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple, Union

from domain.exceptions.atlas_errors import ValidationError


def _require_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValidationError(
            f"{name} must be a positive integer",
            field=name,
            value=value,
            constraint=">= 1"
        )


@dataclass(frozen=True)
class LRegion:
    """
    L-shaped region of type [a1, a2; b1, b2]

    Union of the a2 x b1 rectangle and the a1 x b2 rectangle sharing the
    origin corner. The concave corner sits at (a1, b1).
    """
    a1: int
    a2: int
    b1: int
    b2: int

    def __post_init__(self):
        for name in ("a1", "a2", "b1", "b2"):
            _require_positive(name, getattr(self, name))
        if self.a1 >= self.a2 or self.b1 >= self.b2:
            raise ValidationError(
                f"Degenerate L-shaped region {self}",
                field="region",
                value=self.as_tuple(),
                constraint="a1 < a2 and b1 < b2"
            )

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.a1, self.a2, self.b1, self.b2)

    def contains_cell(self, x: int, y: int) -> bool:
        """Whether the unit cell with lower-left corner (x, y) lies in the region"""
        if x < 0 or y < 0:
            return False
        return (x < self.a2 and y < self.b1) or (x < self.a1 and y < self.b2)

    @classmethod
    def parse(cls, text: str) -> 'LRegion':
        """
        Parse "a1,a2,b1,b2" or "[a1,a2;b1,b2]"

        Raises:
            ValidationError: If the text is not four integers
        """
        cleaned = text.strip().strip("[]").replace(";", ",")
        parts = [p.strip() for p in cleaned.split(",") if p.strip()]
        try:
            values = [int(p) for p in parts]
        except ValueError:
            values = []
        if len(values) != 4:
            raise ValidationError(
                "Region must be four integers a1,a2,b1,b2",
                field="region",
                value=text
            )
        return cls(*values)

    def __str__(self) -> str:
        return f"[{self.a1},{self.a2};{self.b1},{self.b2}]"


@dataclass(frozen=True)
class Rect:
    """a x b rectangle region (billiard-curve baseline)"""
    a: int
    b: int

    def __post_init__(self):
        _require_positive("a", self.a)
        _require_positive("b", self.b)

    def contains_cell(self, x: int, y: int) -> bool:
        return 0 <= x < self.a and 0 <= y < self.b

    def __str__(self) -> str:
        return f"Rect({self.a},{self.b})"


Region = Union[LRegion, Rect]


class SquareEdge(Enum):
    """
    Edges along which squares can be added

    SHORT_ARM_B1: right edge of the a2 x b1 arm (length b1)
    LONG_ARM_B2:  left edge (length b2)
    BOTTOM_A2:    bottom edge (length a2)
    TOP_A1:       top edge of the a1 x b2 arm (length a1)
    """
    SHORT_ARM_B1 = "short_arm_b1"
    LONG_ARM_B2 = "long_arm_b2"
    BOTTOM_A2 = "bottom_a2"
    TOP_A1 = "top_a1"

    @classmethod
    def from_string(cls, value: str) -> 'SquareEdge':
        for member in cls:
            if member.value == value:
                return member
        raise ValidationError(
            f"Unknown edge: {value}",
            field="edge",
            value=value,
            constraint=", ".join(m.value for m in cls)
        )


@dataclass(frozen=True)
class SquareMove:
    """
    Adding n squares along an edge

    Negative n is only legal along BOTTOM_A2 under the negative-move
    condition checked by LShapeService.add_squares. on_swapped marks a
    move found on the swapped region [b1, b2; a1, a2].
    """
    edge: SquareEdge
    n: int
    on_swapped: bool = False

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n == 0:
            raise ValidationError(
                "Square count must be a nonzero integer",
                field="n",
                value=self.n
            )

    def __str__(self) -> str:
        suffix = " (swapped)" if self.on_swapped else ""
        return f"{self.n:+d} {self.edge.value}{suffix}"


@dataclass(frozen=True)
class PlacedRegion:
    """
    Region placed on the integer lattice

    For L-shaped regions the concave corner offset + (a1, b1) must have an
    odd coordinate sum.
    """
    region: Region
    offset: Tuple[int, int] = (0, 0)

    def __post_init__(self):
        if isinstance(self.region, LRegion):
            cx, cy = self.concave_corner
            if (cx + cy) % 2 == 0:
                raise ValidationError(
                    f"Concave corner of {self.region} placed at an even point",
                    field="offset",
                    value=self.offset,
                    constraint="concave corner at an odd point"
                )

    @property
    def concave_corner(self) -> Tuple[int, int]:
        if not isinstance(self.region, LRegion):
            raise ValidationError("Rectangles have no concave corner", field="region")
        return (self.offset[0] + self.region.a1, self.offset[1] + self.region.b1)

    @property
    def width(self) -> int:
        return self.region.a2 if isinstance(self.region, LRegion) else self.region.a

    @property
    def height(self) -> int:
        return self.region.b2 if isinstance(self.region, LRegion) else self.region.b

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Lower-left corners of the unit cells, in lattice coordinates"""
        ox, oy = self.offset
        for y in range(self.height):
            for x in range(self.width):
                if self.region.contains_cell(x, y):
                    yield (ox + x, oy + y)

    def outline(self) -> Tuple[Tuple[int, int], ...]:
        """Boundary polygon, counter-clockwise from the origin corner"""
        ox, oy = self.offset
        if isinstance(self.region, Rect):
            corners = [(0, 0), (self.region.a, 0), (self.region.a, self.region.b), (0, self.region.b)]
        else:
            r = self.region
            corners = [(0, 0), (r.a2, 0), (r.a2, r.b1), (r.a1, r.b1), (r.a1, r.b2), (0, r.b2)]
        return tuple((ox + x, oy + y) for x, y in corners)
