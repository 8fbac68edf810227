"""Flat boundary pieces of polytopes.

Pairs of boundary segments of one plane section are where Hilbert
triangles stop being strict, see `hilbert_geometry.hilbert.triangle`.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import TYPE_CHECKING

import structlog

from hilbert_geometry import settings
from hilbert_geometry.exceptions import DimensionMismatchError
from hilbert_geometry.linalg import add, cross3, dot, max_abs, scale, sub

from .bodies import order_counterclockwise
from .types import FlatPair, FlatPiece, Section

if TYPE_CHECKING:
    from hilbert_geometry.linalg import Scalar, Vector

    from .bodies import Polytope

__all__ = ("degenerate_flats",)

LOGGER = structlog.get_logger()


def _turn(u: Vector, v: Vector) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def _is_parallel(u: Vector, v: Vector, exact: bool) -> bool:
    turn = _turn(u, v)
    if exact:
        return turn == 0
    return abs(turn) <= settings.geometry.FLAT_DEDUP_TOL * max_abs(u) * max_abs(v)


def _pairs_of(
    polygon: list[tuple[Vector, Vector]], section: Section, exact: bool
) -> list[FlatPair]:
    """All edge pairs of a section polygon.

    `polygon` holds `(plane coordinates, ambient point)` in counter-clockwise
    order.
    """
    count = len(polygon)
    edges = [(polygon[i], polygon[(i + 1) % count]) for i in range(count)]
    pairs = []
    for (p, q), (r, s) in combinations(edges, 2):
        parallel = _is_parallel(sub(q[0], p[0]), sub(s[0], r[0]), exact)
        pairs.append(FlatPair(FlatPiece(p[1], q[1]), FlatPiece(r[1], s[1]), section, parallel))
    return pairs


def _planar_flats(body: Polytope) -> list[FlatPair]:
    one, zero = (Fraction(1), Fraction(0)) if body.is_exact else (1.0, 0.0)
    section = Section((zero, zero), (one, zero), (zero, one))
    return _pairs_of([(v, v) for v in body.vertices], section, body.is_exact)


def _plane_key(normal: Vector, offset: Scalar, exact: bool) -> tuple[Scalar, ...]:
    """Normal and offset scaled so the first non-negligible normal entry is one."""
    size = max_abs(normal)
    tol = 0.0 if exact else settings.geometry.FLAT_DEDUP_TOL * size
    head = next(n for n in normal if abs(n) > tol)
    if exact:
        head = Fraction(head)  # type: ignore[arg-type]
        return tuple(Fraction(n) / head for n in (*normal, offset))  # type: ignore[arg-type]
    return tuple(n / head for n in (*normal, offset))


def _same_plane(key: tuple[Scalar, ...], other: tuple[Scalar, ...], exact: bool) -> bool:
    if exact:
        return key == other
    return max_abs(sub(key, other)) <= settings.geometry.FLAT_DEDUP_TOL * max(1.0, max_abs(key))


def _section_polygon(
    body: Polytope, section: Section, normal: Vector, offset: Scalar
) -> list[tuple[Vector, Vector]] | None:
    """Vertices of the plane section, `None` unless the plane cuts the interior."""
    exact = body.is_exact
    reach = max(1.0, body.diameter()) * max_abs(normal)
    tol = 0.0 if exact else settings.geometry.FLAT_DEDUP_TOL * reach
    sides = {v: dot(normal, v) - offset for v in body.vertices}
    if not (any(s > tol for s in sides.values()) and any(s < -tol for s in sides.values())):
        return None
    points: list[Vector] = [v for v, s in sides.items() if abs(s) <= tol]
    for p, q in body.edges:
        sp, sq = sides[p], sides[q]
        if (sp > tol and sq < -tol) or (sp < -tol and sq > tol):
            weight = Fraction(sp) / (sp - sq) if exact else sp / (sp - sq)  # type: ignore[arg-type]
            points.append(add(p, scale(weight, sub(q, p))))
    unique: list[Vector] = []
    for point in points:
        if exact and point in unique:
            continue
        if not exact and any(max_abs(sub(point, u)) <= tol for u in unique):
            continue
        unique.append(point)
    planar = {section.coordinates(p): p for p in unique}
    return [(c, planar[c]) for c in order_counterclockwise(list(planar))]


def _spatial_flats(body: Polytope) -> list[FlatPair]:
    exact = body.is_exact
    seen: list[tuple[Scalar, ...]] = []
    pairs: list[FlatPair] = []
    for first, second in permutations(body.edges, 2):
        if body.facets_of(*first, *second):
            continue
        half = Fraction(1, 2) if exact else 0.5
        middle = scale(half, add(*second))
        u, v = sub(first[1], first[0]), sub(middle, first[0])
        normal = cross3(u, v)
        floor = 0.0 if exact else settings.geometry.ZERO_TOL * max_abs([*u, *v]) ** 2
        if max_abs(normal) <= floor:
            continue
        offset = dot(normal, first[0])
        key = _plane_key(normal, offset, exact)
        if any(_same_plane(key, other, exact) for other in seen):
            continue
        seen.append(key)
        section = Section(first[0], u, v)
        polygon = _section_polygon(body, section, normal, offset)
        if polygon is not None and len(polygon) >= 3:
            pairs.extend(_pairs_of(polygon, section, exact))
    return pairs


def degenerate_flats(body: Polytope) -> list[FlatPair]:
    """Pairs of boundary segments lying in a common plane section.

    In the plane this is every pair of edges; in space, sections through
    an edge and the midpoint of a second edge not sharing a facet with it,
    deduplicated by normal and offset. Both pieces of a pair are oriented
    the same way around their section polygon, and pairs of parallel
    pieces are flagged.

    Raises:
        DimensionMismatchError: outside dimensions 2 and 3.
    """
    if body.dim == 2:
        pairs = _planar_flats(body)
    elif body.dim == 3:
        pairs = _spatial_flats(body)
    else:
        raise DimensionMismatchError(f"flats are enumerated in dimensions 2 and 3, not {body.dim}")
    LOGGER.debug(settings.log.COMPUTATION_EVENT, operation="degenerate_flats", pairs=len(pairs))
    return pairs
