"""Bounded convex bodies with non-empty interior.

Polytopes are kept in both representations: vertices in convex position
(counter-clockwise in the plane) and irredundant facet half-spaces. With
rational data every polytope computation is exact. Ellipsoids and
membership-oracle bodies are float only.
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import cached_property, cmp_to_key
from itertools import combinations
from typing import TYPE_CHECKING

import numpy as np
import structlog
from scipy.optimize import brentq, linprog
from scipy.spatial import ConvexHull, HalfspaceIntersection

from hilbert_geometry import settings
from hilbert_geometry.exceptions import (
    CoincidentPointsError,
    DimensionMismatchError,
    EmptyInteriorError,
    OutsideDomainError,
    PointsNotInteriorError,
    UnboundedBodyError,
    UnsupportedPairError,
)
from hilbert_geometry.linalg import (
    ArithmeticMode,
    coerce_point,
    cross3,
    dot,
    is_exact,
    max_abs,
    max_minor,
    solve,
    sub,
)
from hilbert_geometry.projective import Collineation, ProjectivePoint, apply_collineation

from .types import Chord, Halfspace, PointClass

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

    from hilbert_geometry.linalg import Scalar, Vector

__all__ = (
    "ConvexBody",
    "Ellipsoid",
    "OracleBody",
    "Polytope",
    "PolytopeH",
    "PolytopeV",
    "chord",
    "classify",
    "is_nested",
    "order_counterclockwise",
)

LOGGER = structlog.get_logger()


def _divide(numerator: Scalar, denominator: Scalar) -> Scalar:
    if is_exact([numerator, denominator]):
        return Fraction(numerator) / Fraction(denominator)  # type: ignore[arg-type]
    return numerator / denominator


def _norm(vector: Iterable[Scalar]) -> float:
    return math.sqrt(sum(float(v) ** 2 for v in vector))  # type: ignore[arg-type]


class ConvexBody(ABC):
    """A closed, bounded convex body of `R^n` with non-empty interior."""

    @property
    @abstractmethod
    def dim(self) -> int:
        """Dimension of the ambient space."""

    @property
    def is_exact(self) -> bool:
        """True when queries are decided in exact rational arithmetic."""
        return False

    @property
    def mode(self) -> ArithmeticMode:
        """Arithmetic mode of the body's queries."""
        return ArithmeticMode.RATIONAL if self.is_exact else ArithmeticMode.FLOAT

    @abstractmethod
    def line_parameters(self, point: Vector, direction: Vector) -> tuple[Scalar, Scalar]:
        """Boundary crossings of the line `point + t * direction`.

        Args:
            point: Strictly interior point.
            direction: Non-zero direction.

        Returns:
            `(t_min, t_max)` with `t_min < 0 < t_max`.
        """

    @abstractmethod
    def classify(self, point: Vector, eps: float = 0.0) -> PointClass:
        """Position of `point`, boundary when within `eps` of it."""

    @abstractmethod
    def bounding_box(self) -> tuple[Vector, Vector]:
        """Lower and upper corner of an axis-aligned box containing the body."""

    @abstractmethod
    def interior_point(self) -> Vector:
        """Some strictly interior point."""

    def diameter(self) -> float:
        """Diagonal of the bounding box, an upper bound of the diameter."""
        lower, upper = self.bounding_box()
        return _norm(sub(upper, lower))

    def contains(self, point: Vector, eps: float = 0.0) -> bool:
        """Closed membership."""
        return self.classify(point, eps) is not PointClass.EXTERIOR

    def check_dim(self, point: Sequence[Scalar]) -> None:
        """Raise `DimensionMismatchError` unless `point` lives in the body's space."""
        if len(point) != self.dim:
            raise DimensionMismatchError(
                f"point of dimension {len(point)} for a body of dimension {self.dim}"
            )


def order_counterclockwise(points: Sequence[Vector]) -> list[Vector]:
    """Sort the vertices of a convex polygon counter-clockwise.

    Angles are compared with cross products only, so rational input is
    ordered exactly. The vertex with the smallest angle about the
    centroid comes first.
    """
    count = len(points)
    center = tuple(sum(coords) / count for coords in zip(*points))

    def half(w: Vector) -> int:
        return 0 if w[1] > 0 or (w[1] == 0 and w[0] > 0) else 1

    def compare(p: Vector, q: Vector) -> int:
        u, v = sub(p, center), sub(q, center)
        if half(u) != half(v):
            return half(u) - half(v)
        turn = u[0] * v[1] - u[1] * v[0]
        return -1 if turn > 0 else (1 if turn < 0 else 0)

    return sorted(points, key=cmp_to_key(compare))


def _canonical_halfspace(normal: Vector, offset: Scalar) -> Halfspace:
    scale_by = max_abs(normal)
    if is_exact([*normal, offset]):
        exact_normal = [Fraction(n) for n in normal]  # type: ignore[arg-type]
        factor = max(abs(n) for n in exact_normal)
        scaled = tuple(n / factor for n in exact_normal)
        return Halfspace(scaled, Fraction(offset) / factor)  # type: ignore[arg-type]
    return Halfspace(tuple(n / scale_by for n in normal), offset / scale_by)


def _exact_facets(points: Sequence[Vector], dim: int) -> list[Halfspace]:
    """Supporting hyperplanes through `dim` affinely independent points."""
    facets: dict[tuple[Scalar, ...], Halfspace] = {}
    for combo in combinations(points, dim):
        if dim == 2:
            p, q = combo
            d = sub(q, p)
            normal: Vector = (d[1], -d[0])
        else:
            p, q, r = combo
            normal = cross3(sub(q, p), sub(r, p))
        if all(n == 0 for n in normal):
            continue
        offset = dot(normal, p)
        values = [dot(normal, x) - offset for x in points]
        if all(v <= 0 for v in values):
            candidate = _canonical_halfspace(normal, offset)
        elif all(v >= 0 for v in values):
            candidate = _canonical_halfspace(tuple(-n for n in normal), -offset)
        else:
            continue
        facets[(*candidate.normal, candidate.offset)] = candidate
    return list(facets.values())


def _float_facets(hull: ConvexHull, tol: float) -> list[Halfspace]:
    """Facets of a qhull hull, merging coplanar simplices."""
    facets: list[Halfspace] = []
    for equation in hull.equations:
        candidate = Halfspace(tuple(float(v) for v in equation[:-1]), float(-equation[-1]))
        duplicate = any(
            max_abs(sub(candidate.normal, f.normal)) <= tol
            and abs(candidate.offset - f.offset) <= tol
            for f in facets
        )
        if not duplicate:
            facets.append(candidate)
    return facets


class Polytope(ConvexBody):
    """Convex hull of finitely many points of `R^n`, `n <= 3`."""

    def __init__(self, points: Iterable[Sequence[Scalar]]) -> None:
        """Build vertex and facet representations of the hull of `points`.

        Raises:
            DimensionMismatchError: for points of mixed or unsupported dimension.
            EmptyInteriorError: when the points don't span the space.
        """
        raw = [tuple(p) for p in points]
        if not raw:
            raise EmptyInteriorError("a polytope needs points")
        dims = {len(p) for p in raw}
        if len(dims) != 1 or not 1 <= next(iter(dims)) <= 3:
            raise DimensionMismatchError(f"points of dimensions {sorted(dims)} given")
        self._dim = dims.pop()
        flat = [v for p in raw for v in p]
        self._exact = is_exact(flat)
        mode = ArithmeticMode.RATIONAL if self._exact else ArithmeticMode.FLOAT
        unique = list(dict.fromkeys(coerce_point(p, mode) for p in raw))
        self.vertices, self.facets = self._hull(unique)
        lower, upper = self.bounding_box()
        self._tol = 0.0 if self._exact else settings.geometry.FLAT_DEDUP_TOL * max(
            1.0, _norm(sub(upper, lower))
        )
        LOGGER.debug(
            settings.log.COMPUTATION_EVENT,
            operation="polytope",
            dim=self._dim,
            vertices=len(self.vertices),
            facets=len(self.facets),
            exact=self._exact,
        )

    def _hull(self, points: list[Vector]) -> tuple[tuple[Vector, ...], tuple[Halfspace, ...]]:
        if self._dim == 1:
            low, high = min(points), max(points)
            if low == high:
                raise EmptyInteriorError("the points coincide")
            one = Fraction(1) if self._exact else 1.0
            return (low, high), (Halfspace((one,), high[0]), Halfspace((-one,), -low[0]))
        origin = points[0]
        if max_minor([sub(p, origin) for p in points[1:]] or [origin], self._dim) == 0:
            raise EmptyInteriorError("the points don't span the space")
        if self._exact:
            facets = _exact_facets(points, self._dim)
        else:
            try:
                hull = ConvexHull(np.array(points, dtype=float))
            except (ValueError, RuntimeError) as exc:
                raise EmptyInteriorError(str(exc)) from exc
            spread = float(np.ptp(hull.points, axis=0).max())
            facets = _float_facets(hull, settings.geometry.FLAT_DEDUP_TOL * max(1.0, spread))
        vertices = [p for p in points if self._is_vertex(p, facets)]
        if self._dim == 2:
            vertices = order_counterclockwise(vertices)
        return tuple(vertices), tuple(facets)

    def _tight(self, point: Vector, facet: Halfspace, tol: float) -> bool:
        slack = facet.slack(point)
        return slack == 0 if self._exact else abs(slack) <= tol

    def _is_vertex(self, point: Vector, facets: Sequence[Halfspace]) -> bool:
        tol = settings.geometry.FLAT_DEDUP_TOL * max(1.0, max_abs(point))
        normals = [f.normal for f in facets if self._tight(point, f, tol)]
        if len(normals) < self._dim:
            return False
        rank_minor = max_minor(normals, self._dim)
        return rank_minor != 0 if self._exact else abs(rank_minor) > tol

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def is_exact(self) -> bool:
        return self._exact

    @cached_property
    def edges(self) -> tuple[tuple[Vector, Vector], ...]:
        """Vertex pairs spanning an edge.

        Consecutive vertices in the plane, in `R^3` the vertex pairs sharing
        two facets.
        """
        if self._dim == 1:
            return ((self.vertices[0], self.vertices[1]),)
        if self._dim == 2:
            count = len(self.vertices)
            return tuple((self.vertices[i], self.vertices[(i + 1) % count]) for i in range(count))
        return tuple(
            (p, q)
            for p, q in combinations(self.vertices, 2)
            if len(self.facets_of(p, q)) >= 2
        )

    def facets_of(self, *points: Vector) -> list[Halfspace]:
        """Facets containing all of `points`."""
        return [f for f in self.facets if all(self._tight(p, f, self._tol) for p in points)]

    def line_parameters(self, point: Vector, direction: Vector) -> tuple[Scalar, Scalar]:
        t_min: Scalar | None = None
        t_max: Scalar | None = None
        for facet in self.facets:
            rate = dot(facet.normal, direction)
            if rate == 0:
                continue
            bound = _divide(facet.slack(point), rate)
            if rate > 0:
                t_max = bound if t_max is None else min(t_max, bound)
            else:
                t_min = bound if t_min is None else max(t_min, bound)
        if t_min is None or t_max is None:  # pragma: no cover
            raise UnboundedBodyError("line leaves the polytope without crossing a facet")
        return t_min, t_max

    def classify(self, point: Vector, eps: float = 0.0) -> PointClass:
        self.check_dim(point)
        if self._exact and eps == 0 and is_exact(point):
            slacks = [f.slack(point) for f in self.facets]
            if any(s < 0 for s in slacks):
                return PointClass.EXTERIOR
            return PointClass.BOUNDARY if any(s == 0 for s in slacks) else PointClass.INTERIOR
        distance = min(float(f.slack(point)) / f.norm() for f in self.facets)
        if abs(distance) <= eps:
            return PointClass.BOUNDARY
        return PointClass.INTERIOR if distance > 0 else PointClass.EXTERIOR

    def bounding_box(self) -> tuple[Vector, Vector]:
        columns = list(zip(*self.vertices))
        return tuple(min(c) for c in columns), tuple(max(c) for c in columns)

    def interior_point(self) -> Vector:
        """Vertex centroid."""
        count = len(self.vertices)
        if self._exact:
            columns = zip(*self.vertices)
            return tuple(Fraction(sum(c)) / count for c in columns)  # type: ignore[arg-type]
        return tuple(float(sum(c)) / count for c in zip(*self.vertices))  # type: ignore[arg-type]

    def transformed(self, g: Collineation) -> PolytopeV:
        """Image under a collineation, e.g. an affine map.

        Raises:
            OutsideDomainError: when `g` sends a point of the body to infinity.
        """
        images = [apply_collineation(g, ProjectivePoint.from_affine(v)) for v in self.vertices]
        heads = [p.coords[0] for p in images]
        if not (all(h > 0 for h in heads) or all(h < 0 for h in heads)):
            raise OutsideDomainError("the collineation sends part of the body to infinity")
        return PolytopeV([p.affine() for p in images])

    def __repr__(self) -> str:
        return f"{type(self).__name__}(vertices={list(self.vertices)!r})"


class PolytopeV(Polytope):
    """Polytope given by points, cleaned to its vertices on construction."""


class PolytopeH(Polytope):
    """Polytope given by half-spaces `normal . x <= offset`."""

    def __init__(self, halfspaces: Iterable[Halfspace]) -> None:
        """Verify boundedness and a non-empty interior, then enumerate vertices.

        Raises:
            UnboundedBodyError: if the half-spaces don't bound a region.
            EmptyInteriorError: if the region has no interior point.
        """
        self.halfspaces = tuple(halfspaces)
        if not self.halfspaces:
            raise UnboundedBodyError("no half-spaces given")
        dims = {h.dim for h in self.halfspaces}
        if len(dims) != 1:
            raise DimensionMismatchError(f"half-spaces of dimensions {sorted(dims)} given")
        dim = dims.pop()
        normals = np.array([[float(v) for v in h.normal] for h in self.halfspaces])
        offsets = np.array([float(h.offset) for h in self.halfspaces])
        self._check_bounded(normals, offsets, dim)
        center = self._chebyshev_center(normals, offsets, dim)
        flat = [v for h in self.halfspaces for v in (*h.normal, h.offset)]
        if is_exact(flat):
            points = self._exact_vertices(dim)
        elif dim == 1:
            points = self._exact_vertices(dim)
        else:
            stacked = np.column_stack([normals, -offsets])
            intersections = HalfspaceIntersection(stacked, center).intersections
            points = [tuple(float(v) for v in p) for p in intersections]
        super().__init__(points)

    @staticmethod
    def _check_bounded(normals: np.ndarray, offsets: np.ndarray, dim: int) -> None:
        """Two support LPs per axis."""
        for axis in range(dim):
            for sign in (1.0, -1.0):
                objective = np.zeros(dim)
                objective[axis] = -sign
                result = linprog(
                    objective,
                    A_ub=normals,
                    b_ub=offsets,
                    bounds=[(None, None)] * dim,
                    method="highs",
                )
                if result.status == 2:
                    raise EmptyInteriorError("the half-spaces have no common point")
                if result.status == 3:
                    raise UnboundedBodyError(f"the region is unbounded along axis {axis}")

    @staticmethod
    def _chebyshev_center(normals: np.ndarray, offsets: np.ndarray, dim: int) -> np.ndarray:
        """Center of the largest inscribed ball."""
        norms = np.linalg.norm(normals, axis=1)
        objective = np.zeros(dim + 1)
        objective[-1] = -1.0
        result = linprog(
            objective,
            A_ub=np.column_stack([normals, norms]),
            b_ub=offsets,
            bounds=[(None, None)] * dim + [(0, None)],
            method="highs",
        )
        floor = settings.geometry.ZERO_TOL * max(1.0, float(np.max(np.abs(offsets))))
        if result.status != 0 or result.x[-1] <= floor:
            raise EmptyInteriorError("the region has no interior point")
        return result.x[:-1]

    def _exact_vertices(self, dim: int) -> list[Vector]:
        points: list[Vector] = []
        for combo in combinations(self.halfspaces, dim):
            solution = solve([h.normal for h in combo], [h.offset for h in combo])
            if solution is None:
                continue
            if all(h.slack(solution) >= 0 for h in self.halfspaces):
                points.append(solution)
        return points


class Ellipsoid(ConvexBody):
    """The body `{x : (x - center)^T shape^-1 (x - center) <= 1}`.

    A ball of radius `r` has `shape = r**2 * I`.
    """

    def __init__(self, center: Sequence[Scalar], shape: Sequence[Sequence[Scalar]]) -> None:
        """
        Raises:
            DimensionMismatchError: if center and shape don't match.
            EmptyInteriorError: unless `shape` is symmetric positive definite.
        """
        self.center = np.array([float(v) for v in center])  # type: ignore[arg-type]
        if any(len(row) != len(center) for row in shape):
            raise DimensionMismatchError("shape matrix must be square and match the center")
        self.shape = np.array([[float(v) for v in row] for row in shape])  # type: ignore[arg-type]
        if self.shape.shape != (len(self.center), len(self.center)) or not len(self.center):
            raise DimensionMismatchError("shape matrix must be square and match the center")
        if not np.allclose(self.shape, self.shape.T):
            raise EmptyInteriorError("shape matrix is not symmetric")
        if np.min(np.linalg.eigvalsh(self.shape)) <= 0:
            raise EmptyInteriorError("shape matrix is not positive definite")
        self.form = np.linalg.inv(self.shape)

    @classmethod
    def ball(cls, center: Sequence[Scalar], radius: float) -> Ellipsoid:
        """Euclidean ball."""
        return cls(center, (radius**2 * np.eye(len(center))).tolist())

    @property
    def dim(self) -> int:
        return len(self.center)

    def level(self, point: Sequence[Scalar]) -> float:
        """`(x - c)^T shape^-1 (x - c)`, below one inside."""
        offset = np.asarray(point, dtype=float) - self.center
        return float(offset @ self.form @ offset)

    def support(self, normal: Sequence[Scalar]) -> float:
        """Support function `max n . x` over the body."""
        n = np.asarray(normal, dtype=float)
        return float(n @ self.center + math.sqrt(n @ self.shape @ n))

    def line_parameters(self, point: Vector, direction: Vector) -> tuple[Scalar, Scalar]:
        offset = np.asarray(point, dtype=float) - self.center
        d = np.asarray(direction, dtype=float)
        a = float(d @ self.form @ d)
        b = float(2.0 * d @ self.form @ offset)
        c = float(offset @ self.form @ offset) - 1.0
        root = math.sqrt(max(b * b - 4.0 * a * c, 0.0))
        q = -0.5 * (b + math.copysign(root, b))
        first, second = q / a, c / q
        return min(first, second), max(first, second)

    def classify(self, point: Vector, eps: float = 0.0) -> PointClass:
        self.check_dim(point)
        rho = math.sqrt(self.level(point))
        if rho == 0:
            return PointClass.INTERIOR
        radial = _norm(np.asarray(point, dtype=float) - self.center) * abs(1.0 - 1.0 / rho)
        if radial <= eps:
            return PointClass.BOUNDARY
        return PointClass.INTERIOR if rho < 1 else PointClass.EXTERIOR

    def bounding_box(self) -> tuple[Vector, Vector]:
        half = np.sqrt(np.diag(self.shape))
        return tuple((self.center - half).tolist()), tuple((self.center + half).tolist())

    def interior_point(self) -> Vector:
        return tuple(self.center.tolist())

    def transformed(self, g: Collineation) -> Ellipsoid:
        """Image under a collineation.

        Raises:
            OutsideDomainError: when the image is not bounded.
        """
        dim = self.dim
        quadric = np.zeros((dim + 1, dim + 1))
        quadric[0, 0] = float(self.center @ self.form @ self.center) - 1.0
        quadric[0, 1:] = quadric[1:, 0] = -(self.form @ self.center)
        quadric[1:, 1:] = self.form
        inverse = np.linalg.inv(np.array(g.matrix, dtype=float))
        image = inverse.T @ quadric @ inverse
        block, linear = image[1:, 1:], image[1:, 0]
        if np.min(np.linalg.eigvalsh(block)) <= 0:
            raise OutsideDomainError("the collineation sends part of the body to infinity")
        center = -np.linalg.solve(block, linear)
        value = float(image[0, 0] + linear @ center)
        return Ellipsoid(center.tolist(), (np.linalg.inv(block / -value)).tolist())

    def __repr__(self) -> str:
        return f"Ellipsoid(center={self.center.tolist()!r}, shape={self.shape.tolist()!r})"


class OracleBody(ConvexBody):
    """Body known through a membership function and a bounding box.

    The membership function must be pure and reentrant.
    """

    def __init__(
        self,
        membership: Callable[[Vector], bool],
        lower: Sequence[float],
        upper: Sequence[float],
        interior: Sequence[float],
    ) -> None:
        self.membership = membership
        self.lower = tuple(float(v) for v in lower)
        self.upper = tuple(float(v) for v in upper)
        self.interior = tuple(float(v) for v in interior)
        if not len(self.lower) == len(self.upper) == len(self.interior):
            raise DimensionMismatchError("bounding box and interior point dimensions differ")
        if not membership(self.interior):
            raise EmptyInteriorError("the given interior point is not a member")

    @property
    def dim(self) -> int:
        return len(self.lower)

    def _exit_parameter(self, point: Vector, direction: Vector) -> float:
        """Where the ray leaves the bounding box."""
        exits = [
            ((hi if d > 0 else lo) - float(p)) / float(d)
            for p, d, lo, hi in zip(point, direction, self.lower, self.upper)
            if d != 0
        ]
        return min(exits)

    def _boundary_parameter(self, point: Vector, direction: Vector) -> float:
        step = _norm(direction)
        tol = settings.geometry.ORACLE_CHORD_TOL * self.diameter() / step
        inside, outside = 0.0, self._exit_parameter(point, direction) + tol
        while outside - inside > tol:
            middle = 0.5 * (inside + outside)
            trial = tuple(float(p) + middle * float(d) for p, d in zip(point, direction))
            if self.membership(trial):
                inside = middle
            else:
                outside = middle
        return 0.5 * (inside + outside)

    def line_parameters(self, point: Vector, direction: Vector) -> tuple[Scalar, Scalar]:
        backwards = tuple(-float(d) for d in direction)
        forwards = self._boundary_parameter(point, direction)
        return -self._boundary_parameter(point, backwards), forwards

    def classify(self, point: Vector, eps: float = 0.0) -> PointClass:
        """Heuristic: checks `point +- eps` along the coordinate axes."""
        self.check_dim(point)
        reach = eps if eps > 0 else settings.geometry.ORACLE_CHORD_TOL * self.diameter()
        nearby = []
        for axis in range(self.dim):
            for sign in (1.0, -1.0):
                shifted = [float(v) for v in point]
                shifted[axis] += sign * reach
                nearby.append(self.membership(tuple(shifted)))
        member = self.membership(tuple(float(v) for v in point))
        if member and all(nearby):
            return PointClass.INTERIOR
        if not member and not any(nearby):
            return PointClass.EXTERIOR
        return PointClass.BOUNDARY

    def bounding_box(self) -> tuple[Vector, Vector]:
        return self.lower, self.upper

    def interior_point(self) -> Vector:
        return self.interior


def classify(body: ConvexBody, point: Sequence[Scalar], eps: float = 0.0) -> PointClass:
    """Interior, boundary (within `eps`) or exterior.

    Raises:
        DimensionMismatchError: if `point` and `body` dimensions differ.
    """
    return body.classify(tuple(point), eps)


def chord(body: ConvexBody, a: Sequence[Scalar], b: Sequence[Scalar]) -> Chord:
    """The chord `X, A, B, Y` of `body` through `a` and `b`.

    Polytopes clip exactly against their facets, ellipsoids solve a
    quadratic, oracles bisect to `ORACLE_CHORD_TOL` times the diameter.

    Raises:
        CoincidentPointsError: if `a == b`.
        PointsNotInteriorError: unless both points are strictly interior.
    """
    a, b = tuple(a), tuple(b)
    body.check_dim(a)
    body.check_dim(b)
    if a == b:
        raise CoincidentPointsError("A and B coincide")
    if classify(body, a) is not PointClass.INTERIOR or classify(body, b) is not PointClass.INTERIOR:
        raise PointsNotInteriorError()
    t_x, t_y = body.line_parameters(a, sub(b, a))
    LOGGER.debug(settings.log.COMPUTATION_EVENT, operation="chord", t_x=t_x, t_y=t_y)
    return Chord.from_parameters(a, b, t_x, t_y)


def _max_norm_squared(center: np.ndarray, matrix: np.ndarray) -> float:
    """`max |center + matrix @ u|**2` over the unit ball.

    Solved on the eigenbasis of `matrix^T matrix` through its secular
    equation, including the case where the top eigenspace is orthogonal to
    the linear term.
    """
    eigenvalues, eigenvectors = np.linalg.eigh(matrix.T @ matrix)
    linear = eigenvectors.T @ matrix.T @ center
    constant = float(center @ center)
    top = eigenvalues[-1]
    size = float(np.linalg.norm(linear))
    if size == 0:
        return float(top) + constant

    def excess(mu: float) -> float:
        return float(np.sum(linear**2 / (mu - eigenvalues) ** 2)) - 1.0

    start = top + size * 1e-12
    if excess(start) > 0:
        mu = brentq(excess, start, top + size)
        w = linear / (mu - eigenvalues)
    else:
        is_top = eigenvalues >= top - 1e-12 * max(1.0, abs(top))
        w = np.where(is_top, 0.0, linear / np.where(is_top, 1.0, top - eigenvalues))
        w[np.argmax(is_top)] = math.sqrt(max(0.0, 1.0 - float(w @ w)))
    return float(w @ (eigenvalues * w) + 2.0 * linear @ w + constant)


def _ellipsoid_in_ellipsoid(inner: Ellipsoid, outer: Ellipsoid) -> bool:
    to_ball = np.linalg.cholesky(outer.form).T
    inner_root = np.linalg.cholesky(inner.shape)
    center = to_ball @ (inner.center - outer.center)
    return _max_norm_squared(center, to_ball @ inner_root) <= 1.0 + settings.geometry.EQUALITY_TOL


def _sampled_nested(inner: ConvexBody, outer: ConvexBody) -> bool:
    """Containment of sampled boundary points of `inner`, a heuristic."""
    rng = np.random.default_rng(0)
    origin = inner.interior_point()
    if not outer.contains(origin):
        return False
    for _ in range(settings.geometry.NESTED_SAMPLES):
        direction = tuple(rng.normal(size=inner.dim).tolist())
        _, t_max = inner.line_parameters(origin, direction)
        point = tuple(float(o) + float(t_max) * d for o, d in zip(origin, direction))
        if not outer.contains(point, settings.geometry.EQUALITY_TOL * outer.diameter()):
            return False
    return True


def is_nested(inner: ConvexBody, outer: ConvexBody, *, exact: bool = True) -> bool:
    """True when every point of `inner` lies in `outer`.

    Polytope insides are decided by their vertices, ellipsoids by support
    functions or by the secular equation. Oracle bodies are only checked on
    sampled boundary points, and only when `exact` is false.

    Raises:
        DimensionMismatchError: for bodies of different dimensions.
        UnsupportedPairError: for oracle bodies when `exact` is set.
    """
    if inner.dim != outer.dim:
        raise DimensionMismatchError(f"dimensions {inner.dim} and {outer.dim} differ")
    eps = 0.0 if outer.is_exact else settings.geometry.ZERO_TOL * max(1.0, outer.diameter())
    if isinstance(inner, Polytope):
        return all(outer.contains(v, eps) for v in inner.vertices)
    if isinstance(inner, Ellipsoid) and isinstance(outer, Polytope):
        return all(
            inner.support(f.normal) <= float(f.offset) + eps * f.norm() for f in outer.facets
        )
    if isinstance(inner, Ellipsoid) and isinstance(outer, Ellipsoid):
        return _ellipsoid_in_ellipsoid(inner, outer)
    if exact:
        raise UnsupportedPairError(
            f"no exact containment test for {type(inner).__name__} in {type(outer).__name__}"
        )
    return _sampled_nested(inner, outer)
