"""The Hilbert metric of a bounded convex body.

For interior points `A != B` with chord `X, A, B, Y` the distance is
`scale * log [X, Y, B, A]`. Everything here works on the chord parameters
of `hilbert_geometry.convex.Chord`, so no coordinates cancel.
"""
from __future__ import annotations

import math
from typing import TYPE_CHECKING, NamedTuple

import numpy as np
import structlog
from pydantic import BaseModel, Field

from hilbert_geometry import settings
from hilbert_geometry.convex import PointClass, chord, classify, is_nested
from hilbert_geometry.exceptions import (
    CoincidentPointsError,
    DimensionMismatchError,
    NotNestedError,
    NumericallyUnstableError,
    OutOfRangeError,
    OutsideDomainError,
    PointsNotInteriorError,
)
from hilbert_geometry.linalg import add, scale, sub
from hilbert_geometry.projective import cross_ratio_of_scalars

if TYPE_CHECKING:
    from collections.abc import Sequence

    from hilbert_geometry.convex import Chord, ConvexBody
    from hilbert_geometry.linalg import Scalar, Vector

__all__ = (
    "HilbertConfig",
    "NestedComparison",
    "ball_boundary",
    "chord_cross_ratio",
    "compare_nested",
    "geodesic_point",
    "hilbert_distance",
    "hilbert_distance_from_chord",
    "klein_distance",
    "sample_directions",
)

LOGGER = structlog.get_logger()


class HilbertConfig(BaseModel):
    """Normalization of the Hilbert metric."""

    class Config:
        allow_mutation = False

    scale: float = Field(default_factory=lambda: settings.geometry.HILBERT_SCALE, gt=0)
    """Multiplier of the log cross ratio.

    `0.5` makes the unit ball the Klein model of curvature `-1`, `1.0` is
    the classical one.
    """

    @classmethod
    def original(cls) -> HilbertConfig:
        """Scale one, the plain logarithm of the cross ratio."""
        return cls(scale=1.0)


class NestedComparison(NamedTuple):
    """Distances of one pair of points in nested bodies."""

    d_inner: float
    d_outer: float


def _config(cfg: HilbertConfig | None) -> HilbertConfig:
    return cfg if cfg is not None else HilbertConfig()


def chord_cross_ratio(ch: Chord) -> Scalar:
    """`[X, Y, B, A]` from the chord parameters, exact for rational chords."""
    return cross_ratio_of_scalars(ch.t_x, ch.t_y, 1, 0).finite()


def hilbert_distance_from_chord(ch: Chord, cfg: HilbertConfig | None = None) -> float:
    """Distance between the inner points of a chord.

    Raises:
        NumericallyUnstableError: when a point is within `BOUNDARY_GUARD`
            chord lengths of the boundary.
    """
    gap = min(-ch.t_x, ch.t_y - 1)
    if gap < settings.geometry.BOUNDARY_GUARD * (ch.t_y - ch.t_x):
        raise NumericallyUnstableError("a point is too close to the boundary")
    ratio = chord_cross_ratio(ch)
    return _config(cfg).scale * math.log(ratio)  # type: ignore[arg-type]


def _check_interior(body: ConvexBody, *points: Vector) -> None:
    for point in points:
        if classify(body, point) is not PointClass.INTERIOR:
            raise PointsNotInteriorError()


def hilbert_distance(
    body: ConvexBody,
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    cfg: HilbertConfig | None = None,
) -> float:
    """Hilbert distance of two interior points, `0` when they coincide.

    Raises:
        PointsNotInteriorError: unless both points are strictly interior.
        NumericallyUnstableError: for points hugging the boundary.
    """
    a, b = tuple(a), tuple(b)
    body.check_dim(a)
    body.check_dim(b)
    if a == b:
        _check_interior(body, a)
        return 0.0
    distance = hilbert_distance_from_chord(chord(body, a, b), cfg)
    LOGGER.debug(settings.log.COMPUTATION_EVENT, operation="hilbert_distance", distance=distance)
    return distance


def _parameter_at(t_min: Scalar, t_max: Scalar, distance: float, scale_by: float) -> float:
    """Chord parameter at `distance` from the point at parameter `0`.

    Solves `[X, Y, P, A] = exp(distance / scale)` for `P`; the equation is a
    Moebius one in the parameter, so the solution is closed form.
    """
    growth = math.exp(distance / scale_by)
    lo, hi = float(t_min), float(t_max)  # type: ignore[arg-type]
    return lo * hi * (growth - 1.0) / (growth * lo - hi)


def geodesic_point(
    body: ConvexBody,
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    s: float,
    cfg: HilbertConfig | None = None,
) -> Vector:
    """The point of segment `[a, b]` at distance `s` from `a`.

    Raises:
        CoincidentPointsError: if `a == b`.
        OutOfRangeError: unless `0 <= s <= d(a, b)`.
    """
    cfg = _config(cfg)
    a, b = tuple(a), tuple(b)
    if a == b:
        raise CoincidentPointsError("A and B coincide")
    ch = chord(body, a, b)
    total = hilbert_distance_from_chord(ch, cfg)
    if s < 0 or s > total * (1 + settings.geometry.EQUALITY_TOL):
        raise OutOfRangeError(f"s must be within [0, {total}], got {s}")
    if s == 0:
        return a
    if s >= total:
        return b
    t = _parameter_at(ch.t_x, ch.t_y, s, cfg.scale)
    return tuple(float(v) for v in add(a, scale(t, sub(b, a))))  # type: ignore[arg-type]


def sample_directions(dim: int, count: int) -> list[Vector]:
    """Unit directions spread over the sphere.

    Uniform angles in the plane, a Fibonacci lattice in space, opposite
    pairs on a line and seeded Gaussian samples above three dimensions.
    """
    if dim == 1:
        return [((-1.0) ** k,) for k in range(count)]
    if dim == 2:
        return [
            (math.cos(2 * math.pi * k / count), math.sin(2 * math.pi * k / count))
            for k in range(count)
        ]
    if dim == 3:
        golden = math.pi * (3.0 - math.sqrt(5.0))
        directions = []
        for k in range(count):
            z = 1.0 - 2.0 * (k + 0.5) / count
            radius = math.sqrt(1.0 - z * z)
            directions.append((radius * math.cos(golden * k), radius * math.sin(golden * k), z))
        return directions
    samples = np.random.default_rng(0).normal(size=(count, dim))
    samples /= np.linalg.norm(samples, axis=1, keepdims=True)
    return [tuple(row) for row in samples.tolist()]


def ball_boundary(
    body: ConvexBody,
    center: Sequence[Scalar],
    r: float,
    n_samples: int,
    cfg: HilbertConfig | None = None,
) -> list[Vector]:
    """Points of the metric sphere of radius `r` about `center`.

    Raises:
        OutOfRangeError: unless `r > 0` and `n_samples >= 3`.
        PointsNotInteriorError: unless `center` is interior.
    """
    cfg = _config(cfg)
    if r <= 0:
        raise OutOfRangeError(f"radius must be positive, got {r}")
    if n_samples < 3:
        raise OutOfRangeError(f"at least 3 samples are needed, got {n_samples}")
    center = tuple(center)
    body.check_dim(center)
    _check_interior(body, center)
    points = []
    for direction in sample_directions(body.dim, n_samples):
        t_min, t_max = body.line_parameters(center, direction)
        t = _parameter_at(t_min, t_max, r, cfg.scale)
        points.append(tuple(float(c) + t * u for c, u in zip(center, direction)))  # type: ignore
    LOGGER.debug(settings.log.COMPUTATION_EVENT, operation="ball_boundary", r=r)
    return points


def compare_nested(
    inner: ConvexBody,
    outer: ConvexBody,
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    cfg: HilbertConfig | None = None,
) -> NestedComparison:
    """Distances of `a` and `b` in both bodies; the inner one is never smaller.

    Raises:
        NotNestedError: unless `inner` is contained in `outer`.
    """
    if not is_nested(inner, outer):
        raise NotNestedError("the inner body is not contained in the outer body")
    return NestedComparison(
        d_inner=hilbert_distance(inner, a, b, cfg),
        d_outer=hilbert_distance(outer, a, b, cfg),
    )


def klein_distance(
    a: Sequence[Scalar], b: Sequence[Scalar], cfg: HilbertConfig | None = None
) -> float:
    """Closed form of the Hilbert distance of the unit ball.

    With scale `1/2` this is the hyperbolic distance of the Klein model,
    `arccosh((1 - a.b) / sqrt((1 - |a|^2)(1 - |b|^2)))`.

    Raises:
        OutsideDomainError: for points outside the open unit ball.
    """
    u = np.asarray(a, dtype=float)
    v = np.asarray(b, dtype=float)
    if u.shape != v.shape:
        raise DimensionMismatchError("points of different dimensions")
    alpha, beta = 1.0 - float(u @ u), 1.0 - float(v @ v)
    if alpha <= 0 or beta <= 0:
        raise OutsideDomainError("points must be inside the unit ball")
    value = (1.0 - float(u @ v)) / math.sqrt(alpha * beta)
    return 2.0 * _config(cfg).scale * math.acosh(max(value, 1.0))
