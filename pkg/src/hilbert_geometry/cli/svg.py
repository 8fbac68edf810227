"""SVG figures of planar constructions.

The view box is the bounding box of the body and of every finite point
drawn, widened by `settings.cli.SVG_MARGIN` on each side. The y axis is
flipped so figures read the mathematical way up, and coordinates are
rounded to six decimals so output is stable across platforms.
"""
from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
import svgwrite

from hilbert_geometry import settings
from hilbert_geometry.convex import Polytope
from hilbert_geometry.exceptions import DimensionMismatchError
from hilbert_geometry.hilbert import sample_directions

if TYPE_CHECKING:
    from collections.abc import Sequence
    from pathlib import Path

    from hilbert_geometry.convex import ConvexBody
    from hilbert_geometry.hilbert import TriangleCertificate
    from hilbert_geometry.linalg import Scalar, Vector
    from hilbert_geometry.projective import ProjectivePoint

__all__ = ("Canvas", "ball_figure", "body_outline", "save", "triangle_figure")

Point = tuple[float, float]

OUTLINE_SAMPLES = 256


def _xy(point: Sequence[Scalar]) -> Point:
    return float(point[0]), float(point[1])  # type: ignore[arg-type]


def body_outline(body: ConvexBody) -> list[Point]:
    """Boundary polygon: the vertices of a polygon, else radial samples.

    Raises:
        DimensionMismatchError: for bodies outside the plane.
    """
    if body.dim != 2:
        raise DimensionMismatchError("figures are drawn for planar bodies only")
    if isinstance(body, Polytope):
        return [_xy(v) for v in body.vertices]
    center = body.interior_point()
    outline = []
    for direction in sample_directions(2, OUTLINE_SAMPLES):
        _, t_max = body.line_parameters(center, direction)
        outline.append(_xy([float(c) + float(t_max) * d for c, d in zip(center, direction)]))
    return outline


class Canvas:
    """An svgwrite drawing over a fixed region of the plane."""

    def __init__(self, points: Sequence[Point]) -> None:
        xs, ys = [p[0] for p in points], [p[1] for p in points]
        self.lower = (min(xs), min(ys))
        self.upper = (max(xs), max(ys))
        width, height = self.upper[0] - self.lower[0], self.upper[1] - self.lower[1]
        diagonal = math.hypot(width, height) or 1.0
        margin = settings.cli.SVG_MARGIN * max(width, height, 1e-9)
        self.unit = diagonal
        self.stroke = _round(settings.cli.STROKE_WIDTH * diagonal)
        view = (
            _round(self.lower[0] - margin),
            _round(-self.upper[1] - margin),
            _round(width + 2 * margin),
            _round(height + 2 * margin),
        )
        pixels = settings.cli.SVG_SIZE
        self.drawing = svgwrite.Drawing(
            size=(pixels, _round(pixels * view[3] / view[2])),
            viewBox=" ".join(str(v) for v in view),
            profile="full",
            debug=False,
        )

    def _map(self, point: Point) -> Point:
        return _round(point[0]), _round(-point[1])

    def polygon(self, points: Sequence[Point], color: str = "black") -> None:
        """Closed outline."""
        self.drawing.add(
            self.drawing.polygon(
                [self._map(p) for p in points],
                fill="none",
                stroke=color,
                stroke_width=self.stroke,
            )
        )

    def polyline(self, points: Sequence[Point], color: str = "black", dashed: bool = False) -> None:
        """Open path through `points`."""
        line = self.drawing.polyline(
            [self._map(p) for p in points], fill="none", stroke=color, stroke_width=self.stroke
        )
        if dashed:
            line.dasharray([3 * self.stroke, 2 * self.stroke])
        self.drawing.add(line)

    def dot(self, point: Point, label: str | None = None, color: str = "black") -> None:
        """A marked point, optionally labelled."""
        self.drawing.add(self.drawing.circle(self._map(point), r=2 * self.stroke, fill=color))
        if label is not None:
            self.label(point, label, color)

    def label(self, point: Point, text: str, color: str = "black") -> None:
        """Text just above right of `point`."""
        offset = 0.012 * self.unit
        x, y = self._map((point[0] + offset, point[1] + offset))
        self.drawing.add(
            self.drawing.text(
                text,
                insert=(x, y),
                fill=color,
                font_size=_round(0.035 * self.unit),
                font_family="serif",
            )
        )

    def edge_point(self, direction: Point) -> Point:
        """Where the ray from the box center in `direction` nearly leaves the box."""
        center = np.array([(a + b) / 2 for a, b in zip(self.lower, self.upper)])
        half = np.array([(b - a) / 2 for a, b in zip(self.lower, self.upper)])
        d = np.array(direction, dtype=float)
        d /= np.linalg.norm(d)
        reach = min(h / abs(c) for h, c in zip(half, d) if abs(c) > 1e-12)
        x, y = center + 0.95 * reach * d
        return float(x), float(y)


def _round(value: float) -> float:
    return round(float(value), 6)


def _finite(point: ProjectivePoint) -> Point | None:
    return None if point.is_ideal else _xy(point.affine())


def _along(points: list[Point], direction: Point) -> list[Point]:
    return sorted(points, key=lambda p: p[0] * direction[0] + p[1] * direction[1])


def triangle_figure(body: ConvexBody, certificate: TriangleCertificate) -> svgwrite.Drawing:
    """The chords, the center of perspective and the projected points.

    Labels follow the construction: `U, V` on chord `AC`, `Z, T` on chord
    `CB`, `X, Y` on chord `AB`, then `W`, `X'`, `Y'` and `D`. Any of the last
    four that is ideal gets its label at the edge of the figure, in its
    direction.
    """
    outline = body_outline(body)
    cert = certificate
    named = {
        "A": _xy(cert.a), "C": _xy(cert.c), "B": _xy(cert.b),
        "U": _xy(cert.u), "V": _xy(cert.v),
        "Z": _xy(cert.z), "T": _xy(cert.t),
        "X": _xy(cert.x), "Y": _xy(cert.y),
    }  # fmt: skip
    homogeneous = {"W": cert.w, "X′": cert.xp, "Y′": cert.yp, "D": cert.d}
    projected = {name: _finite(point) for name, point in homogeneous.items()}
    finite = [p for p in projected.values() if p is not None]
    canvas = Canvas([*outline, *named.values(), *finite])
    canvas.polygon(outline)

    for first, second in (("U", "V"), ("Z", "T"), ("X", "Y")):
        canvas.polyline([named[first], named[second]])
    w = projected["W"]
    sides = (("U", "Z", "X′"), ("V", "T", "Y′"))
    for start, end, foot in sides:
        points = [named[start], named[end]]
        points += [p for p in (projected[foot], w) if p is not None]
        direction = (named[end][0] - named[start][0], named[end][1] - named[start][1])
        canvas.polyline(_along(points, direction), color="gray", dashed=True)
    d = projected["D"]
    if d is not None:
        if w is not None:
            canvas.polyline([w, d], color="gray", dashed=True)
        else:
            direction = _xy(cert.w.coords[1:])
            canvas.polyline([d, canvas.edge_point(direction)], color="gray", dashed=True)

    for name, point in named.items():
        canvas.dot(point, name, color="blue" if name in "ACB" else "black")
    for name, point in projected.items():
        if point is not None:
            canvas.dot(point, name, color="red")
        else:
            canvas.label(canvas.edge_point(_xy(homogeneous[name].coords[1:])), name, color="red")
    return canvas.drawing


def ball_figure(body: ConvexBody, center: Vector, boundary: Sequence[Vector]) -> svgwrite.Drawing:
    """A metric sphere inside its body."""
    outline = body_outline(body)
    points = [_xy(p) for p in boundary]
    canvas = Canvas([*outline, *points])
    canvas.polygon(outline)
    canvas.polygon(points, color="red")
    canvas.dot(_xy(center), "O", color="blue")
    return canvas.drawing


def save(drawing: svgwrite.Drawing, path: Path | str) -> None:
    """Write the figure."""
    drawing.saveas(str(path))
