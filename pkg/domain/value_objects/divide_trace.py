"""
Divide Trace Value Objects
Combinatorial description of a traced lattice divide
"""

from dataclasses import dataclass, field
from typing import Tuple

Point = Tuple[int, int]


@dataclass(frozen=True)
class Segment:
    """Unit diagonal segment of the divide, tagged with its component"""
    start: Point
    end: Point
    component: int


@dataclass(frozen=True)
class DivideTrace:
    """
    Traced divide X ∩ L

    Components are numbered arcs first (in the order their first endpoint
    appears when scanning corners), then circles.

    Attributes:
        arcs: Number of immersed arcs
        circles: Number of immersed circles
        endpoints: Arc endpoints, two per arc, in component order
        double_point_count: Interior even points carrying both diagonal families
        intersections: Symmetric matrix; entry [i][j] (i != j) counts crossings
            between components i and j, [i][i] counts self-crossings of i
        double_points: The double points themselves, sorted
    """
    arcs: int
    circles: int
    endpoints: Tuple[Point, ...]
    double_point_count: int
    intersections: Tuple[Tuple[int, ...], ...]
    double_points: Tuple[Point, ...] = field(default_factory=tuple)

    @property
    def components(self) -> int:
        return self.arcs + self.circles

    def crossing_total(self) -> int:
        """Sum of the upper triangle (diagonal included) of the intersection matrix"""
        n = len(self.intersections)
        return sum(self.intersections[i][j] for i in range(n) for j in range(i, n))
