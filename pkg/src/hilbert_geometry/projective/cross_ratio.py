"""Cross ratios of four collinear points.

The value is `[X,Y,Z,T] = (x - z)/(x - t) * (y - t)/(y - z)` for chart
coordinates `x, y, z, t` of the common line. It is evaluated from 2x2
brackets of homogeneous vectors, so points at infinity need no special
case, and stays exact when the coordinates are rational.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING

import structlog

from hilbert_geometry import settings
from hilbert_geometry.exceptions import IndeterminateCrossRatioError
from hilbert_geometry.linalg import is_exact, is_zero

from .types import INFINITY, CollinearQuad, ProjectivePoint, ProjectiveScalar

if TYPE_CHECKING:
    from collections.abc import Sequence

    from hilbert_geometry.linalg import Scalar

__all__ = (
    "bracket",
    "cross_ratio",
    "cross_ratio_of",
    "cross_ratio_of_scalars",
    "line_frame",
    "separates",
)

LOGGER = structlog.get_logger()


def bracket(p: ProjectivePoint, q: ProjectivePoint, frame: tuple[int, int]) -> Scalar:
    """The 2x2 minor of `p` and `q` on the coordinate pair `frame`."""
    i, j = frame
    return p.coords[i] * q.coords[j] - p.coords[j] * q.coords[i]


def line_frame(points: Sequence[ProjectivePoint]) -> tuple[int, int]:
    """Coordinate pair on which the projection of the common line is best
    conditioned.

    Brackets on this pair are a fixed non-zero multiple of the intrinsic
    determinant of the line, so ratios of them are well defined.
    """
    normalized = [p.normalized() for p in points]
    width = len(points[0].coords)
    best, frame = -1.0, (0, 1)
    for p, q in combinations(normalized, 2):
        for pair in combinations(range(width), 2):
            size = float(abs(bracket(p, q, pair)))
            if size > best:
                best, frame = size, pair
    return frame


def cross_ratio(quad: CollinearQuad) -> ProjectiveScalar:
    """The cross ratio `[X,Y,Z,T]` of a collinear quad.

    Raises:
        IndeterminateCrossRatioError: when the formula degenerates to `0/0`.
    """
    points = [p.normalized() for p in quad.points]
    x, y, z, t = points
    frame = line_frame(points)
    numerator = bracket(x, z, frame) * bracket(y, t, frame)
    denominator = bracket(x, t, frame) * bracket(y, z, frame)
    magnitude = max(float(abs(bracket(p, q, frame))) for p, q in combinations(points, 2)) ** 2
    num_zero = is_zero(numerator, magnitude)
    den_zero = is_zero(denominator, magnitude)
    if num_zero and den_zero:
        raise IndeterminateCrossRatioError("cross ratio evaluates to 0/0")
    if den_zero:
        return INFINITY
    if num_zero:
        return ProjectiveScalar(Fraction(0) if is_exact([numerator]) else 0.0)
    if is_exact([numerator, denominator]):
        return ProjectiveScalar(Fraction(numerator) / Fraction(denominator))
    return ProjectiveScalar(numerator / denominator)


def cross_ratio_of(
    x: ProjectivePoint, y: ProjectivePoint, z: ProjectivePoint, t: ProjectivePoint
) -> ProjectiveScalar:
    """`cross_ratio()` of four positional points."""
    return cross_ratio(CollinearQuad((x, y, z, t)))


def _as_point(value: Scalar | ProjectiveScalar) -> ProjectivePoint:
    if isinstance(value, ProjectiveScalar):
        return value.to_point()
    if isinstance(value, float) and value in (float("inf"), float("-inf")):
        return INFINITY.to_point()
    return ProjectiveScalar(value).to_point()


def cross_ratio_of_scalars(
    x: Scalar | ProjectiveScalar,
    y: Scalar | ProjectiveScalar,
    z: Scalar | ProjectiveScalar,
    t: Scalar | ProjectiveScalar,
) -> ProjectiveScalar:
    """Cross ratio of four chart values of the projective line.

    `INFINITY` and float infinities stand for the point at infinity.
    """
    return cross_ratio_of(_as_point(x), _as_point(y), _as_point(z), _as_point(t))


def separates(
    a: ProjectivePoint, b: ProjectivePoint, c: ProjectivePoint, d: ProjectivePoint
) -> bool:
    """True when the pair `{a, b}` separates the pair `{c, d}` on their line.

    This is the sign test `[a,b,c,d] < 0`; it needs no chart, so it orders
    points of a projective line purely synthetically.
    """
    value = cross_ratio_of(a, b, c, d)
    if value.is_infinite:
        return False
    finite = value.finite()
    if isinstance(finite, complex):
        if abs(finite.imag) > settings.geometry.COLLINEAR_TOL * max(abs(finite), 1.0):
            return False
        finite = finite.real
    LOGGER.debug(settings.log.COMPUTATION_EVENT, operation="separates", cross_ratio=finite)
    return finite < 0
