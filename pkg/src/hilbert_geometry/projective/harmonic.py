"""Harmonic conjugates and von Staudt coordinates.

`harmonic_conjugate_synthetic()` uses joins and meets only, the complete
quadrangle construction. `von_staudt_coordinate()` builds on it to assign
dyadic coordinates to points of a line without ever measuring a length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import structlog

from hilbert_geometry import settings
from hilbert_geometry.exceptions import (
    DegenerateAuxiliaryError,
    DegenerateFrameError,
    DegenerateInputError,
    DimensionMismatchError,
    NonCollinearError,
    OutOfRangeError,
)
from hilbert_geometry.linalg import is_exact

from .cross_ratio import bracket, cross_ratio_of, line_frame, separates
from .types import ProjectivePoint, ProjectiveScalar, collinear, join, meet

if TYPE_CHECKING:
    from hilbert_geometry.linalg import Scalar

__all__ = (
    "VonStaudtCoordinate",
    "analytic_coordinate",
    "default_auxiliaries",
    "harmonic_conjugate_analytic",
    "harmonic_conjugate_synthetic",
    "point_at_coordinate",
    "von_staudt_coordinate",
)

LOGGER = structlog.get_logger()


def _ratio(numerator: Scalar, denominator: Scalar) -> Scalar:
    if is_exact([numerator, denominator]):
        return Fraction(numerator) / Fraction(denominator)  # type: ignore[arg-type]
    return numerator / denominator


def _check_same_dim(*points: ProjectivePoint) -> None:
    if len({p.dim for p in points}) > 1:
        raise DimensionMismatchError("points live in spaces of different dimension")


def harmonic_conjugate_analytic(
    a: ProjectivePoint, b: ProjectivePoint, c: ProjectivePoint
) -> ProjectivePoint:
    """The point `D` of line `AB` with `[A,B,C,D] == -1`.

    Writing `C = alpha*A + beta*B`, the conjugate is `alpha*A - beta*B`.

    Raises:
        NonCollinearError: if `c` is off the line `ab`.
        DegenerateInputError: if `a == b` or `c` is `a` or `b`.
    """
    _check_same_dim(a, b, c)
    if a == b:
        raise DegenerateInputError("A and B coincide")
    if c in (a, b):
        raise DegenerateInputError("C coincides with A or B")
    if not collinear(a, b, c):
        raise NonCollinearError("A, B and C are not on one line")
    a, b, c = a.normalized(), b.normalized(), c.normalized()
    frame = line_frame([a, b, c])
    base = bracket(a, b, frame)
    alpha = _ratio(bracket(c, b, frame), base)
    beta = _ratio(bracket(a, c, frame), base)
    return a.combine(b, alpha, -beta)


def default_auxiliaries(
    a: ProjectivePoint, b: ProjectivePoint, c: ProjectivePoint
) -> tuple[ProjectivePoint, ProjectivePoint]:
    """Axis-aligned auxiliary points for `harmonic_conjugate_synthetic()`.

    `E` is the coordinate point `e_k` farthest from the base line, `k`
    maximizing the `k`-th coordinate of the line, and `F = C + E`.

    Raises:
        DimensionMismatchError: outside the projective plane.
    """
    _check_same_dim(a, b, c)
    if a.dim != 2:
        raise DimensionMismatchError("synthetic constructions run in the projective plane")
    base = join(a, b)
    k = max(range(3), key=lambda i: abs(base.coords[i]))
    exact = all(p.is_exact for p in (a, b, c))
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    e = ProjectivePoint(tuple(one if i == k else zero for i in range(3)))
    f = c.normalized().combine(e, one, one)
    return e, f


def harmonic_conjugate_synthetic(
    a: ProjectivePoint,
    b: ProjectivePoint,
    c: ProjectivePoint,
    e: ProjectivePoint,
    f: ProjectivePoint,
) -> ProjectivePoint:
    """Harmonic conjugate of `c` w.r.t. `a`, `b` by a complete quadrangle.

    With `G = AF.BE` and `H = BF.AE`, the line `GH` meets `AB` in the
    conjugate. Only joins and meets are used.

    Args:
        a: First base point.
        b: Second base point.
        c: Point of line `ab` to conjugate.
        e: Auxiliary point off the base line.
        f: Auxiliary point on line `ce`, off the base line.

    Raises:
        DimensionMismatchError: outside the projective plane.
        NonCollinearError: if `c` is off the line `ab`.
        DegenerateInputError: if the base points coincide.
        DegenerateAuxiliaryError: if `e`, `f` don't satisfy their conditions.
    """
    _check_same_dim(a, b, c, e, f)
    if a.dim != 2:
        raise DimensionMismatchError("synthetic constructions run in the projective plane")
    if a == b or c in (a, b):
        raise DegenerateInputError("A, B and C must be distinct")
    if not collinear(a, b, c):
        raise NonCollinearError("A, B and C are not on one line")
    base = join(a, b)
    if base.contains(e) or base.contains(f):
        raise DegenerateAuxiliaryError("auxiliary points must be off the base line")
    if f in (c, e) or not collinear(c, e, f):
        raise DegenerateAuxiliaryError("F must be on line CE and distinct from C and E")
    try:
        g = meet(join(a, f), join(b, e))
        h = meet(join(b, f), join(a, e))
        d = meet(join(g, h), base)
    except DegenerateInputError as exc:
        raise DegenerateAuxiliaryError(str(exc)) from exc
    LOGGER.debug(settings.log.COMPUTATION_EVENT, operation="harmonic_conjugate_synthetic", d=str(d))
    return d


def analytic_coordinate(
    p0: ProjectivePoint, p1: ProjectivePoint, p_inf: ProjectivePoint, x: ProjectivePoint
) -> ProjectiveScalar:
    """Coordinate of `x` in the projective scale `p0 -> 0, p1 -> 1, p_inf -> inf`.

    That is the cross ratio `[x, p1, p0, p_inf]`.
    """
    return cross_ratio_of(x, p1, p0, p_inf)


def point_at_coordinate(
    p0: ProjectivePoint, p1: ProjectivePoint, p_inf: ProjectivePoint, value: Scalar
) -> ProjectivePoint:
    """Inverse of `analytic_coordinate()`."""
    _check_same_dim(p0, p1, p_inf)
    p0, p1, p_inf = p0.normalized(), p1.normalized(), p_inf.normalized()
    frame = line_frame([p0, p1, p_inf])
    base = bracket(p0, p_inf, frame)
    alpha = _ratio(bracket(p1, p_inf, frame), base)
    beta = _ratio(bracket(p0, p1, frame), base)
    return p0.combine(p_inf, alpha, value * beta)


@dataclass(frozen=True)
class VonStaudtCoordinate:
    """Result of `von_staudt_coordinate()`."""

    value: Fraction
    """Dyadic rational `m / 2**depth`."""
    depth: int
    out_of_range: bool = False
    """Set when the point is outside `[P0, P1]`, `value` is then the nearer end."""


def von_staudt_coordinate(
    p0: ProjectivePoint,
    p1: ProjectivePoint,
    p_inf: ProjectivePoint,
    x: ProjectivePoint,
    depth: int,
) -> VonStaudtCoordinate:
    """Dyadic coordinate of `x`, found by harmonic bisection only.

    The segment `[p0, p1]` not containing `p_inf` is halved `depth` times.
    Each midpoint is the harmonic conjugate of `p_inf` w.r.t. the current
    ends, and which half holds `x` is decided by pair separation. The
    line is carried into the projective plane so the quadrangle
    construction has room for its auxiliary points.

    Args:
        p0: Point with coordinate 0.
        p1: Point with coordinate 1.
        p_inf: Point with coordinate infinity.
        x: Point to coordinatize.
        depth: Number of bisections, the result is a multiple of `2**-depth`.

    Raises:
        DegenerateFrameError: if the frame points aren't distinct.
        NonCollinearError: if the four points aren't on one line.
        DegenerateInputError: if `x` is the point at infinity of the frame.
        OutOfRangeError: if `depth < 1`.
    """
    if depth < 1:
        raise OutOfRangeError(f"depth must be positive, got {depth}")
    _check_same_dim(p0, p1, p_inf, x)
    if p0 == p1 or p_inf in (p0, p1):
        raise DegenerateFrameError("P0, P1 and Pinf must be distinct")
    if not collinear(p0, p1, p_inf, x):
        raise NonCollinearError("frame and point are not on one line")
    if x == p_inf:
        raise DegenerateInputError("X is the point at infinity of the frame")

    normalized = [p.normalized() for p in (p0, p1, p_inf, x)]
    frame = line_frame(normalized)
    base = bracket(normalized[0], normalized[1], frame)

    def lift(point: ProjectivePoint) -> ProjectivePoint:
        alpha = _ratio(bracket(point, normalized[1], frame), base)
        beta = _ratio(bracket(normalized[0], point, frame), base)
        zero = Fraction(0) if is_exact([alpha, beta]) else 0.0
        return ProjectivePoint((alpha, beta, zero))

    lo, hi, inf, target = (lift(p) for p in normalized)
    lo_value, hi_value = Fraction(0), Fraction(1)

    if target == lo:
        return VonStaudtCoordinate(lo_value, depth)
    if target == hi:
        return VonStaudtCoordinate(hi_value, depth)
    if not separates(lo, hi, target, inf):
        beyond_one = separates(hi, inf, lo, target)
        return VonStaudtCoordinate(hi_value if beyond_one else lo_value, depth, out_of_range=True)

    def midpoint(left: ProjectivePoint, right: ProjectivePoint) -> ProjectivePoint:
        auxiliaries = default_auxiliaries(left, right, inf)
        return harmonic_conjugate_synthetic(left, right, inf, *auxiliaries)

    for _ in range(depth):
        mid = midpoint(lo, hi)
        mid_value = (lo_value + hi_value) / 2
        if target == mid:
            return VonStaudtCoordinate(mid_value, depth)
        if separates(lo, mid, target, inf):
            hi, hi_value = mid, mid_value
        else:
            lo, lo_value = mid, mid_value

    # one more halving decides which end is nearer, ties go to the lower end
    mid = midpoint(lo, hi)
    nearer_lo = target == mid or separates(lo, mid, target, inf)
    value = lo_value if nearer_lo else hi_value
    LOGGER.debug(
        settings.log.COMPUTATION_EVENT, operation="von_staudt_coordinate", value=value, depth=depth
    )
    return VonStaudtCoordinate(value, depth)
