"""
SVG Diagram Renderer
Static drawings of placed regions and their divides
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from application.interfaces.services import IDiagramRenderer
from domain.value_objects.divide_trace import Point, Segment
from domain.value_objects.regions import PlacedRegion


SVG_NS = "http://www.w3.org/2000/svg"


def _num(value: float) -> str:
    """Fixed two-decimal rendering with trailing zeros dropped"""
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _props(attrs: Dict[str, object]) -> str:
    return " ".join(f'{key.replace("_", "-")}="{value}"' for key, value in attrs.items())


@dataclass(frozen=True)
class RenderOptions:
    """Drawing options; corner_radius is in lattice units"""
    unit_px: int = 40
    corner_radius: float = 0.3
    mark_double_points: bool = True
    margin_px: int = 20
    outline_color: str = "#555555"
    curve_color: str = "#1f5fbf"
    marker_color: str = "#d62728"
    stroke_width: float = 2.0


class SvgDiagramRenderer(IDiagramRenderer):
    """
    SVG Diagram Renderer

    Draws the region outline, each curve component as one path with
    quadratic rounding at reflection corners, and optional double-point
    markers. Output bytes depend only on the input and the options.
    """

    def __init__(self, options: RenderOptions = RenderOptions()):
        self.options = options

    def render(
        self,
        placed: PlacedRegion,
        segments: Sequence[Segment],
        double_points: Sequence[Point]
    ) -> str:
        opt = self.options
        width = placed.width * opt.unit_px + 2 * opt.margin_px
        height = placed.height * opt.unit_px + 2 * opt.margin_px

        lines = [
            f'<svg {_props({"xmlns": SVG_NS, "width": width, "height": height, "viewBox": f"0 0 {width} {height}"})}>',
            f'  <polygon {_props(self._outline_attrs(placed))}/>',
        ]
        for path in self._component_paths(segments):
            lines.append(f'  <path {_props(self._path_attrs(placed, path))}/>')
        if opt.mark_double_points:
            for point in sorted(double_points):
                x, y = self._to_svg(placed, point)
                lines.append(
                    f'  <circle {_props({"cx": _num(x), "cy": _num(y), "r": _num(opt.unit_px * 0.12), "fill": opt.marker_color})}/>'
                )
        lines.append("</svg>")
        return "\n".join(lines) + "\n"

    def _to_svg(self, placed: PlacedRegion, point: Tuple[float, float]) -> Tuple[float, float]:
        """Lattice coordinates to SVG pixels; y grows downwards"""
        opt = self.options
        ox, oy = placed.offset
        x = opt.margin_px + (point[0] - ox) * opt.unit_px
        y = opt.margin_px + (placed.height - (point[1] - oy)) * opt.unit_px
        return x, y

    def _outline_attrs(self, placed: PlacedRegion) -> Dict[str, object]:
        corners = [self._to_svg(placed, corner) for corner in placed.outline()]
        return {
            "points": " ".join(f"{_num(x)},{_num(y)}" for x, y in corners),
            "fill": "none",
            "stroke": self.options.outline_color,
            "stroke_width": _num(self.options.stroke_width),
        }

    def _component_paths(self, segments: Sequence[Segment]) -> List[List[Point]]:
        """Vertex chains per component, in component order"""
        chains: Dict[int, List[Point]] = {}
        for segment in segments:
            chain = chains.setdefault(segment.component, [segment.start])
            chain.append(segment.end)
        return [chains[cid] for cid in sorted(chains)]

    def _path_attrs(self, placed: PlacedRegion, vertices: List[Point]) -> Dict[str, object]:
        r = self.options.corner_radius
        closed = len(vertices) > 2 and vertices[0] == vertices[-1]

        def pt(p: Tuple[float, float]) -> str:
            x, y = self._to_svg(placed, p)
            return f"{_num(x)} {_num(y)}"

        def toward(a: Point, b: Point, t: float) -> Tuple[float, float]:
            return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)

        if closed:
            # start halfway along the first segment so every vertex is a corner
            start = toward(vertices[0], vertices[1], 0.5)
            commands = [f"M {pt(start)}"]
            chain = [start] + list(vertices[1:]) + [start]
        else:
            commands = [f"M {pt(vertices[0])}"]
            chain = list(vertices)

        for i in range(1, len(chain) - 1):
            before, here, after = chain[i - 1], chain[i], chain[i + 1]
            incoming = (here[0] - before[0], here[1] - before[1])
            outgoing = (after[0] - here[0], after[1] - here[1])
            if _same_direction(incoming, outgoing):
                continue
            entry = toward(here, before, r / _length(incoming))
            exit_ = toward(here, after, r / _length(outgoing))
            commands.append(f"L {pt(entry)} Q {pt(here)} {pt(exit_)}")

        if closed:
            commands.append(f"L {pt(start)} Z")
        else:
            commands.append(f"L {pt(chain[-1])}")
        return {
            "d": " ".join(commands),
            "fill": "none",
            "stroke": self.options.curve_color,
            "stroke_width": _num(self.options.stroke_width),
            "stroke_linejoin": "round",
        }


def _length(v: Tuple[float, float]) -> float:
    """Steps along a lattice diagonal, measured in lattice units per axis"""
    return max(abs(v[0]), abs(v[1])) or 1.0


def _same_direction(u: Tuple[float, float], v: Tuple[float, float]) -> bool:
    return u[0] * v[1] == u[1] * v[0] and u[0] * v[0] + u[1] * v[1] > 0
