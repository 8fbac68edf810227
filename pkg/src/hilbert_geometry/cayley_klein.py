"""Metrics and angles defined by a quadric absolute.

A symmetric matrix `Q` defines the quadric `u^T Q u = 0` of projective
space. A line through `A` and `B` meets it in two points `U` and `V`,
possibly complex conjugate, and the cross ratio `[A, B, U, V]` measures
distances on that line: its argument for a definite absolute, its modulus
for a Lorentzian one. Angles between lines of the plane are the same
measurement against the two isotropic points at infinity.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, NamedTuple

import numpy as np
import structlog

from hilbert_geometry import settings
from hilbert_geometry.exceptions import (
    AbsoluteSignatureError,
    DegenerateInputError,
    DimensionMismatchError,
    LineInAbsoluteError,
    OutsideDomainError,
    TangentDegenerateError,
    TangentError,
    ZeroDirectionError,
)
from hilbert_geometry.hilbert import HilbertConfig
from hilbert_geometry.linalg import max_abs
from hilbert_geometry.projective import ProjectivePoint, cross_ratio_of

if TYPE_CHECKING:
    from collections.abc import Sequence

    from hilbert_geometry.linalg import Matrix, Scalar
    from hilbert_geometry.projective import Collineation

__all__ = (
    "AbsolutePair",
    "Convention",
    "LinePair",
    "Quadric",
    "Signature",
    "absolute_intersections",
    "ck_distance",
    "laguerre_angle",
    "spherical_distance",
)

LOGGER = structlog.get_logger()


class Convention(str, enum.Enum):
    """Which real metric an absolute induces."""

    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


class Signature(NamedTuple):
    """Inertia of a symmetric matrix."""

    positive: int
    negative: int
    zero: int


@dataclass(frozen=True)
class Quadric:
    """The quadric `u^T Q u = 0` of n-dimensional projective space.

    `Q` is only defined up to a non-zero factor.
    """

    matrix: Matrix

    def __post_init__(self) -> None:
        array = np.asarray(self.matrix, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 2:
            raise DimensionMismatchError("a quadric needs a square matrix of size >= 2")
        size = float(np.abs(array).max())
        if size == 0:
            raise DegenerateInputError("the zero matrix defines no quadric")
        if not np.allclose(array, array.T, atol=settings.geometry.ZERO_TOL * size, rtol=0):
            raise DegenerateInputError("quadric matrix is not symmetric")
        object.__setattr__(self, "matrix", tuple(tuple(float(v) for v in row) for row in array))

    @classmethod
    def sphere(cls, dim: int) -> Quadric:
        """`u_0^2 + ... + u_n^2 = 0`, the absolute of elliptic space."""
        return cls(tuple(map(tuple, np.eye(dim + 1))))

    @classmethod
    def standard_cone(cls, dim: int) -> Quadric:
        """`u_1^2 + ... + u_n^2 - u_0^2 = 0`, whose inside is the unit ball."""
        diagonal = np.ones(dim + 1)
        diagonal[0] = -1.0
        return cls(tuple(map(tuple, np.diag(diagonal))))

    @property
    def dim(self) -> int:
        """Dimension of the projective space."""
        return len(self.matrix) - 1

    @property
    def array(self) -> np.ndarray:
        """The matrix as a numpy array."""
        return np.asarray(self.matrix, dtype=float)

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues."""
        return np.linalg.eigvalsh(self.array)

    @cached_property
    def signature(self) -> Signature:
        """Counts of positive, negative and zero eigenvalues."""
        values = self.eigenvalues
        tol = settings.geometry.COLLINEAR_TOL * float(np.abs(values).max())
        return Signature(
            positive=int((values > tol).sum()),
            negative=int((values < -tol).sum()),
            zero=int((np.abs(values) <= tol).sum()),
        )

    @property
    def is_definite(self) -> bool:
        """No real points: all eigenvalues of one sign."""
        positive, negative, zero = self.signature
        return zero == 0 and (positive == 0 or negative == 0)

    @property
    def is_lorentzian(self) -> bool:
        """Exactly one eigenvalue of the minority sign, none zero."""
        positive, negative, zero = self.signature
        return zero == 0 and min(positive, negative) == 1

    @property
    def interior_sign(self) -> float:
        """Sign of `u^T Q u` inside a Lorentzian quadric.

        On a line both eigenvalues are alone, the negative one is taken.
        """
        return -1.0 if self.signature.negative == 1 else 1.0

    def form(self, p: Sequence[Scalar], q: Sequence[Scalar]) -> Scalar:
        """The bilinear form `p^T Q q`, complex for complex arguments."""
        value = np.asarray(p) @ self.array @ np.asarray(q)
        return complex(value) if np.iscomplexobj(value) else float(value)

    def transformed(self, g: Collineation) -> Quadric:
        """Image under `g`: the quadric `g^-T Q g^-1`."""
        if g.dim != self.dim:
            raise DimensionMismatchError(f"collineation of dimension {g.dim}, quadric {self.dim}")
        inverse = np.asarray(g.inverse().matrix, dtype=float)
        return Quadric(tuple(map(tuple, inverse.T @ self.array @ inverse)))


class AbsolutePair(NamedTuple):
    """The two points where a line meets the absolute."""

    u: ProjectivePoint
    v: ProjectivePoint
    real: bool


@dataclass(frozen=True)
class LinePair:
    """Two lines of the plane through a common point, by their directions."""

    l: tuple[float, float]
    m: tuple[float, float]

    def __post_init__(self) -> None:
        for direction in (self.l, self.m):
            if len(direction) != 2:
                raise DimensionMismatchError("line directions live in the plane")
            if all(c == 0 for c in direction):
                raise ZeroDirectionError("a line direction is the zero vector")


def _roots(
    quadric: Quadric, a: ProjectivePoint, b: ProjectivePoint
) -> tuple[tuple[complex, complex], tuple[complex, complex], bool]:
    """Roots `(mu, lambda)` of `(mu A + lambda B)^T Q (mu A + lambda B) = 0`.

    Returned as coordinates on the line in the basis `A, B`, and whether
    they are real.
    """
    p = [complex(c) for c in a.normalized().coords]
    q = [complex(c) for c in b.normalized().coords]
    alpha, beta, gamma = quadric.form(p, p), quadric.form(p, q), quadric.form(q, q)
    alpha, beta, gamma = (complex(v).real for v in (alpha, beta, gamma))
    size = max(max_abs(quadric.eigenvalues), 1e-300)
    tol = settings.geometry.COLLINEAR_TOL * size
    if max(abs(alpha), abs(beta), abs(gamma)) <= tol:
        raise LineInAbsoluteError("the whole line lies on the absolute")
    discriminant = beta * beta - alpha * gamma
    if abs(discriminant) <= tol * tol:
        raise TangentError("the line is tangent to the absolute")
    root = cmath.sqrt(discriminant)
    if abs(beta + root) < abs(beta - root):
        root = -root
    pivot = -(beta + root)
    if abs(gamma) >= abs(alpha):
        # gamma l^2 + 2 beta l + alpha = 0, points A + l B
        first, second = (1.0 + 0j, pivot / gamma), (1.0 + 0j, alpha / pivot)
    else:
        # alpha m^2 + 2 beta m + gamma = 0, points m A + B
        first, second = (pivot / alpha, 1.0 + 0j), (gamma / pivot, 1.0 + 0j)
    return first, second, discriminant > 0


def _point_on_line(
    a: ProjectivePoint, b: ProjectivePoint, coefficients: tuple[complex, complex], real: bool
) -> ProjectivePoint:
    mu, lam = coefficients
    coords = [mu * complex(x) + lam * complex(y) for x, y in zip(a.coords, b.coords)]
    if real:
        return ProjectivePoint(tuple(c.real for c in coords))
    return ProjectivePoint(tuple(coords))


def _check_points(quadric: Quadric, *points: ProjectivePoint) -> None:
    for point in points:
        if point.dim != quadric.dim:
            raise DimensionMismatchError(
                f"point of dimension {point.dim} against a quadric of dimension {quadric.dim}"
            )


def absolute_intersections(
    quadric: Quadric, a: ProjectivePoint, b: ProjectivePoint
) -> AbsolutePair:
    """Where the line `AB` meets the absolute.

    Raises:
        DegenerateInputError: if `a == b`.
        LineInAbsoluteError: if the line lies on the quadric.
        TangentError: if the line touches it in a double point.
    """
    _check_points(quadric, a, b)
    if a == b:
        raise DegenerateInputError("A and B coincide, they span no line")
    first, second, real = _roots(quadric, a, b)
    return AbsolutePair(
        u=_point_on_line(a, b, first, real),
        v=_point_on_line(a, b, second, real),
        real=real,
    )


def _line_cross_ratio(
    first: tuple[complex, complex], second: tuple[complex, complex], real: bool, order: str
) -> complex:
    """Cross ratio on the line in the basis `A = (1, 0)`, `B = (0, 1)`."""
    cast = (lambda z: z.real) if real else (lambda z: z)
    points = {
        "A": ProjectivePoint((1.0, 0.0)),
        "B": ProjectivePoint((0.0, 1.0)),
        "U": ProjectivePoint(tuple(cast(c) for c in first)),
        "V": ProjectivePoint(tuple(cast(c) for c in second)),
    }
    value = cross_ratio_of(*(points[name] for name in order)).finite()
    return complex(value)


def ck_distance(
    quadric: Quadric,
    a: ProjectivePoint,
    b: ProjectivePoint,
    convention: Convention | str,
    cfg: HilbertConfig | None = None,
) -> float:
    """Cayley-Klein distance of two real points.

    Elliptic: `scale * |Im log [A, B, U, V]|` against a definite absolute;
    with the default scale of `1/2` the values lie in `[0, pi/2]`.
    Hyperbolic: `scale * log [U, V, B, A]` against a Lorentzian absolute,
    for points inside it; `U` is taken on the side of `A` so the ratio is
    at least one. This is the Hilbert distance of the body bounded by the
    quadric.

    Raises:
        AbsoluteSignatureError: if the quadric doesn't fit the convention.
        OutsideDomainError: for hyperbolic points outside the absolute.
        TangentDegenerateError: if line `AB` is tangent to the absolute.
    """
    convention = Convention(convention)
    cfg = cfg if cfg is not None else HilbertConfig()
    _check_points(quadric, a, b)
    if convention is Convention.ELLIPTIC and not quadric.is_definite:
        raise AbsoluteSignatureError(
            f"elliptic distance needs a definite absolute, got {quadric.signature}"
        )
    if convention is Convention.HYPERBOLIC:
        if not quadric.is_lorentzian:
            raise AbsoluteSignatureError(
                f"hyperbolic distance needs a Lorentzian absolute, got {quadric.signature}"
            )
        for point in (a, b):
            coords = point.normalized().coords
            if quadric.interior_sign * quadric.form(coords, coords).real <= 0:
                raise OutsideDomainError("points must be inside the absolute")
    if a == b:
        return 0.0
    try:
        first, second, real = _roots(quadric, a, b)
    except TangentError as exc:
        raise TangentDegenerateError(str(exc)) from exc

    if convention is Convention.ELLIPTIC:
        ratio = _line_cross_ratio(first, second, real, "ABUV")
        distance = cfg.scale * abs(cmath.log(ratio).imag)
    else:
        ratio = _line_cross_ratio(first, second, real, "UVBA").real
        if ratio < 1:
            ratio = 1 / ratio
        distance = cfg.scale * math.log(ratio)
    LOGGER.debug(
        settings.log.COMPUTATION_EVENT,
        operation="ck_distance",
        convention=convention.value,
        distance=distance,
    )
    return distance


def laguerre_angle(pair: LinePair) -> float:
    """Unoriented angle between two lines, in `[0, pi/2]`.

    Half the argument of the cross ratio of the two directions with the
    isotropic points `(1, i)` and `(1, -i)`; for directions at angles
    `alpha` and `beta` that cross ratio is `exp(2i(alpha - beta))`.
    """
    x = ProjectivePoint(tuple(float(c) for c in pair.l))
    y = ProjectivePoint(tuple(float(c) for c in pair.m))
    if x == y:
        return 0.0
    u, v = ProjectivePoint((1.0, 1j)), ProjectivePoint((1.0, -1j))
    ratio = complex(cross_ratio_of(x, y, u, v).finite())
    return abs(cmath.log(ratio).imag) / 2


def spherical_distance(a: Sequence[Scalar], b: Sequence[Scalar]) -> float:
    """Geodesic distance of projective points in elliptic space.

    The angle `theta` between unit-sphere representatives folded to
    `min(theta, pi - theta)`, antipodes being one point.
    """
    u = np.asarray(a, dtype=float)
    v = np.asarray(b, dtype=float)
    norms = float(np.linalg.norm(u) * np.linalg.norm(v))
    if norms == 0:
        raise DegenerateInputError("the zero vector is no projective point")
    theta = math.acos(float(np.clip(u @ v / norms, -1.0, 1.0)))
    return min(theta, math.pi - theta)
