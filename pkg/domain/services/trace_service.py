"""
Trace Service
Combinatorial tracing of lattice divides
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from domain.exceptions.atlas_errors import TraceError
from domain.value_objects.divide_trace import DivideTrace, Point, Segment
from domain.value_objects.regions import LRegion, PlacedRegion, Region

Cell = Tuple[int, int]


def _diagonal(cell: Cell) -> Tuple[Point, Point]:
    """The diagonal of a unit cell joining its even corners"""
    x, y = cell
    if (x + y) % 2 == 0:
        return (x, y), (x + 1, y + 1)
    return (x + 1, y), (x, y + 1)


def _cells_at(point: Point) -> Tuple[Cell, Cell, Cell, Cell]:
    """Cells around an even point: the two '+' cells, then the two '-' cells"""
    x, y = point
    return (x, y), (x - 1, y - 1), (x - 1, y), (x, y - 1)


class TraceService:
    """
    Trace Service (Domain Service)

    Every unit cell of a placed region carries one diagonal of the π/4
    lattice between its even corners. The divide is the union of these
    diagonals; vertex degrees classify even points as endpoints (1),
    reflections on edges (2) and double points (4). A degree-3 vertex is
    a concave corner placed at an even point.
    """

    def place(self, region: Region) -> PlacedRegion:
        """Canonical placement: offset (0,0) when a1 + b1 is odd, else (1,0)"""
        if isinstance(region, LRegion) and (region.a1 + region.b1) % 2 == 0:
            return PlacedRegion(region, (1, 0))
        return PlacedRegion(region, (0, 0))

    def trace(self, placed: PlacedRegion) -> DivideTrace:
        return self.trace_cells(placed.cells(), label=str(placed.region))

    def trace_cells(self, cells: Iterable[Cell], label: Optional[str] = None) -> DivideTrace:
        """
        Trace the divide carried by an arbitrary set of unit cells

        Raises:
            TraceError: On a degree-3 vertex or inconsistent bookkeeping
        """
        components, cell_component, degree = self._walk(frozenset(cells), label)

        arcs = [c for c in components if c[0]]
        circles = [c for c in components if not c[0]]
        endpoints: List[Point] = []
        for _, path in arcs:
            endpoints.extend([path[0], path[-1]])

        size = len(components)
        matrix = [[0] * size for _ in range(size)]
        doubles: List[Point] = []
        for point in sorted(degree):
            if degree[point] != 4:
                continue
            doubles.append(point)
            plus_cell, _, minus_cell, _ = _cells_at(point)
            i, j = cell_component[plus_cell], cell_component[minus_cell]
            if i == j:
                matrix[i][i] += 1
            else:
                matrix[i][j] += 1
                matrix[j][i] += 1

        return DivideTrace(
            arcs=len(arcs),
            circles=len(circles),
            endpoints=tuple(endpoints),
            double_point_count=len(doubles),
            intersections=tuple(tuple(row) for row in matrix),
            double_points=tuple(doubles)
        )

    def is_immersed_arc(self, trace: DivideTrace) -> bool:
        return trace.arcs == 1 and trace.circles == 0

    def curve_geometry(self, placed: PlacedRegion) -> List[Segment]:
        """Every diagonal unit segment, tagged with its component id"""
        cells = frozenset(placed.cells())
        components, cell_component, _ = self._walk(cells, str(placed.region))
        segments: List[Segment] = []
        for cid, (_, path) in enumerate(components):
            for start, end in zip(path, path[1:]):
                segments.append(Segment(start, end, cid))
        if len(segments) != len(cells):
            raise TraceError(
                f"Traced {len(segments)} segments for {len(cells)} cells",
                region=str(placed.region)
            )
        return segments

    def component_paths(self, placed: PlacedRegion) -> List[Tuple[bool, List[Point]]]:
        """(is_arc, vertex path) per component; circles repeat their first vertex"""
        components, _, _ = self._walk(frozenset(placed.cells()), str(placed.region))
        return components

    def linking_numbers(self, trace: DivideTrace) -> Dict[Tuple[int, int], int]:
        """
        Pairwise crossing counts between distinct components

        Only arcs map one-to-one onto link components; a closed branch
        carries two of them.

        Raises:
            TraceError: If the trace contains closed curves
        """
        if trace.circles:
            raise TraceError(
                f"Linking numbers need an arc-only divide; found {trace.circles} closed curve(s)"
            )
        n = len(trace.intersections)
        return {
            (i, j): trace.intersections[i][j]
            for i in range(n)
            for j in range(i + 1, n)
        }

    def _walk(
        self,
        cells: FrozenSet[Cell],
        label: Optional[str]
    ) -> Tuple[List[Tuple[bool, List[Point]]], Dict[Cell, int], Dict[Point, int]]:
        degree: Dict[Point, int] = {}
        for cell in cells:
            for point in _diagonal(cell):
                degree[point] = degree.get(point, 0) + 1

        for point, d in degree.items():
            if d == 3:
                raise TraceError("Curve reaches a concave corner", point=point, region=label)

        visited: Set[Cell] = set()
        cell_component: Dict[Cell, int] = {}
        components: List[Tuple[bool, List[Point]]] = []

        def leave(point: Point, arrived: Optional[Cell], direction: Optional[Point]) -> Optional[Cell]:
            if degree[point] == 4:
                # straight through a double point
                x, y = point
                dx, dy = direction
                return (min(x, x + dx), min(y, y + dy))
            rest = [c for c in _cells_at(point) if c in cells and c != arrived]
            return rest[0] if rest else None

        def run(start: Point, first: Cell, closed: bool) -> List[Point]:
            cid = len(components)
            path = [start]
            point, cell = start, first
            while cell is not None:
                if cell in visited:
                    if closed and cell == first:
                        break
                    raise TraceError("Cell visited twice", point=point, region=label)
                visited.add(cell)
                cell_component[cell] = cid
                p, q = _diagonal(cell)
                nxt = q if point == p else p
                direction = (nxt[0] - point[0], nxt[1] - point[1])
                path.append(nxt)
                point = nxt
                if degree[point] == 1:
                    break
                cell = leave(point, cell, direction)
            return path

        for point in sorted(p for p, d in degree.items() if d == 1):
            cell = next(c for c in _cells_at(point) if c in cells)
            if cell in visited:
                continue
            components.append((True, run(point, cell, closed=False)))

        for cell in sorted(cells):
            if cell in visited:
                continue
            start, _ = _diagonal(cell)
            components.append((False, run(start, cell, closed=True)))

        if len(visited) != len(cells):
            raise TraceError("Unvisited cells after tracing", region=label)
        return components, cell_component, degree
