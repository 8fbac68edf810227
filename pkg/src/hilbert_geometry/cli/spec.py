"""Body and point specifications read by the command line.

A body is one JSON document tagged by `type`:

    {"type": "polygon", "vertices": [[0, 0], [4, 0], [0, 4]]}
    {"type": "polytope-v", "vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]}
    {"type": "polytope-h", "halfspaces": [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]}
    {"type": "ellipsoid", "center": [0, 0], "shape": [[1, 0], [0, 1]]}

Half-space rows are `(n_1, ..., n_d, c)` for `n . x <= c`. Numbers are JSON
numbers or strings `"p/q"`; in rational mode every number becomes a
`Fraction`, so write non-dyadic values as strings there.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import TYPE_CHECKING, Union

import msgspec

from hilbert_geometry.convex import Ellipsoid, Halfspace, PolytopeH, PolytopeV
from hilbert_geometry.exceptions import SpecificationError
from hilbert_geometry.linalg import ArithmeticMode, coerce_point, coerce_scalar

if TYPE_CHECKING:
    from hilbert_geometry.convex import ConvexBody
    from hilbert_geometry.linalg import Vector

__all__ = (
    "BodySpec",
    "EllipsoidSpec",
    "PolygonSpec",
    "PolytopeHSpec",
    "PolytopeVSpec",
    "build_body",
    "load_body",
    "load_matrix",
    "parse_point",
)

Number = Union[float, str]


class PolygonSpec(msgspec.Struct, tag="polygon", forbid_unknown_fields=True):
    """Convex polygon by its vertices."""

    vertices: list[list[Number]]


class PolytopeVSpec(msgspec.Struct, tag="polytope-v", forbid_unknown_fields=True):
    """Convex hull of points in dimension 1 to 3."""

    vertices: list[list[Number]]


class PolytopeHSpec(msgspec.Struct, tag="polytope-h", forbid_unknown_fields=True):
    """Intersection of half-spaces `n . x <= c`, given as rows `(n, c)`."""

    halfspaces: list[list[Number]]


class EllipsoidSpec(msgspec.Struct, tag="ellipsoid", forbid_unknown_fields=True):
    """`{x : (x - center)^T shape^-1 (x - center) <= 1}`."""

    center: list[Number]
    shape: list[list[Number]]


BodySpec = Union[PolygonSpec, PolytopeVSpec, PolytopeHSpec, EllipsoidSpec]


def _rows(rows: list[list[Number]], mode: ArithmeticMode, width: int | None = None) -> list[Vector]:
    widths = {len(row) for row in rows} | ({width} if width is not None else set())
    if len(widths) > 1:
        raise SpecificationError(f"rows of different lengths {sorted(widths)}")
    return [coerce_point(row, mode) for row in rows]


def build_body(spec: BodySpec, mode: ArithmeticMode | str = ArithmeticMode.FLOAT) -> ConvexBody:
    """Construct the body a decoded specification describes.

    Raises:
        SpecificationError: for unreadable numbers and ragged rows. Polygon
            vertices must also be planar.
    """
    mode = ArithmeticMode(mode)
    if isinstance(spec, PolygonSpec):
        vertices = _rows(spec.vertices, mode)
        if any(len(v) != 2 for v in vertices):
            raise SpecificationError("polygon vertices need two coordinates")
        return PolytopeV(vertices)
    if isinstance(spec, PolytopeVSpec):
        return PolytopeV(_rows(spec.vertices, mode))
    if isinstance(spec, PolytopeHSpec):
        return PolytopeH(Halfspace.from_row(row) for row in _rows(spec.halfspaces, mode))
    center = coerce_point(spec.center, ArithmeticMode.FLOAT)
    if len(spec.shape) != len(center):
        raise SpecificationError(f"shape matrix needs {len(center)} rows")
    return Ellipsoid(center, _rows(spec.shape, ArithmeticMode.FLOAT, width=len(center)))


def load_body(
    source: str | bytes | Path, mode: ArithmeticMode | str = ArithmeticMode.FLOAT
) -> ConvexBody:
    """Decode a body from a JSON document or a path to one.

    Raises:
        SpecificationError: for unreadable files and malformed documents.
    """
    if isinstance(source, Path):
        try:
            source = source.read_bytes()
        except OSError as exc:
            raise SpecificationError(f"can't read body file: {exc}") from exc
    try:
        spec = msgspec.json.decode(source, type=BodySpec)
    except (msgspec.ValidationError, msgspec.DecodeError) as exc:
        raise SpecificationError(f"invalid body specification: {exc}") from exc
    return build_body(spec, mode)


def load_matrix(source: str | bytes | Path) -> list[list[float]]:
    """Decode a JSON matrix, a list of rows of numbers."""
    if isinstance(source, Path):
        try:
            source = source.read_bytes()
        except OSError as exc:
            raise SpecificationError(f"can't read matrix file: {exc}") from exc
    try:
        rows = msgspec.json.decode(source, type=list[list[Number]])
    except (msgspec.ValidationError, msgspec.DecodeError) as exc:
        raise SpecificationError(f"invalid matrix: {exc}") from exc
    if len({len(row) for row in rows}) > 1:
        raise SpecificationError("matrix rows of different lengths")
    return [[float(coerce_scalar(v)) for v in row] for row in rows]  # type: ignore[arg-type]


_SEPARATORS = re.compile(r"[\s,]+")


def parse_point(text: str, mode: ArithmeticMode | str = ArithmeticMode.FLOAT) -> Vector:
    """Read a point written as `"x y ..."` or `"x,y,..."`.

    Raises:
        SpecificationError: for empty input or unreadable numbers.
    """
    parts = [p for p in _SEPARATORS.split(text.strip()) if p]
    if not parts:
        raise SpecificationError(f"no coordinates in {text!r}")
    return coerce_point(parts, mode)
