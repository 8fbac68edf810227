"""Value types shared by the convex body representations."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from hilbert_geometry.exceptions import DegenerateInputError, DimensionMismatchError
from hilbert_geometry.linalg import add, dot, is_exact, is_zero, max_abs, scale, sub

if TYPE_CHECKING:
    from hilbert_geometry.linalg import Scalar, Vector

__all__ = (
    "Chord",
    "FlatPair",
    "FlatPiece",
    "Halfspace",
    "PointClass",
    "Section",
)


class PointClass(str, enum.Enum):
    """Position of a point relative to a closed convex body."""

    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class Halfspace:
    """The closed half-space `normal . x <= offset`."""

    normal: Vector
    offset: Scalar

    def __post_init__(self) -> None:
        if all(n == 0 for n in self.normal):
            raise DegenerateInputError("half-space normal is the zero vector")

    @classmethod
    def from_row(cls, row: Vector) -> Halfspace:
        """Build from `(n_1, ..., n_d, c)`."""
        if len(row) < 2:
            raise DimensionMismatchError("a half-space row needs a normal and an offset")
        return cls(tuple(row[:-1]), row[-1])

    @property
    def dim(self) -> int:
        """Dimension of the ambient space."""
        return len(self.normal)

    def slack(self, point: Vector) -> Scalar:
        """`offset - normal . point`, non-negative inside."""
        return self.offset - dot(self.normal, point)

    def norm(self) -> float:
        """Euclidean norm of the normal."""
        return float(sum(float(n) ** 2 for n in self.normal)) ** 0.5


@dataclass(frozen=True)
class Chord:
    """Chord of a body through two interior points.

    The points are `X, A, B, Y` in this order along the line, with `X` and
    `Y` on the boundary. Parameters are along `A + t (B - A)`, so `A` is
    at `0`, `B` at `1`, `X` at `t_x < 0` and `Y` at `t_y > 1`.
    """

    x: Vector
    a: Vector
    b: Vector
    y: Vector
    t_x: Scalar
    t_y: Scalar

    @classmethod
    def from_parameters(cls, a: Vector, b: Vector, t_x: Scalar, t_y: Scalar) -> Chord:
        """Build the chord from its boundary parameters."""
        direction = sub(b, a)
        return cls(
            x=add(a, scale(t_x, direction)),
            a=a,
            b=b,
            y=add(a, scale(t_y, direction)),
            t_x=t_x,
            t_y=t_y,
        )

    @property
    def carrier(self) -> tuple[Vector, Vector]:
        """Point and direction of the line."""
        return self.a, sub(self.b, self.a)

    def reversed(self) -> Chord:
        """The chord through `B` then `A`."""
        return Chord(
            x=self.y,
            a=self.b,
            b=self.a,
            y=self.x,
            t_x=1 - self.t_y,
            t_y=1 - self.t_x,
        )


@dataclass(frozen=True)
class FlatPiece:
    """A segment contained in the boundary of a polytope."""

    start: Vector
    end: Vector

    def __post_init__(self) -> None:
        if len(self.start) != len(self.end):
            raise DimensionMismatchError("segment ends have different dimensions")
        delta = sub(self.end, self.start)
        if all(is_zero(d, max_abs([*self.start, *self.end])) for d in delta):
            raise DegenerateInputError("a flat piece needs positive length")

    @property
    def direction(self) -> Vector:
        """`end - start`."""
        return sub(self.end, self.start)

    def at(self, parameter: Scalar) -> Vector:
        """The point `start + parameter * (end - start)`."""
        return add(self.start, scale(parameter, self.direction))


@dataclass(frozen=True)
class Section:
    """An affine plane, given by an origin and two spanning directions.

    Points of the plane are `origin + s * u + t * v`.
    """

    origin: Vector
    u: Vector
    v: Vector

    @property
    def dim(self) -> int:
        """Dimension of the ambient space."""
        return len(self.origin)

    def lift(self, s: Scalar, t: Scalar) -> Vector:
        """Ambient point with plane coordinates `(s, t)`."""
        return add(self.origin, add(scale(s, self.u), scale(t, self.v)))

    def coordinates(self, point: Vector) -> tuple[Scalar, Scalar]:
        """Plane coordinates of an ambient point of the plane.

        Solved by Cramer's rule on the best conditioned pair of axes, exact
        for rational data.

        Raises:
            DegenerateInputError: if `u` and `v` are parallel.
        """
        w = sub(point, self.origin)
        pairs = [(i, j) for i in range(self.dim) for j in range(i + 1, self.dim)]

        def minor(pair: tuple[int, int]) -> Scalar:
            k, l = pair
            return self.u[k] * self.v[l] - self.u[l] * self.v[k]

        i, j = max(pairs, key=lambda p: abs(minor(p)))
        determinant = minor((i, j))
        if is_zero(determinant, max_abs([*self.u, *self.v]) ** 2):
            raise DegenerateInputError("section directions are parallel")
        s = w[i] * self.v[j] - w[j] * self.v[i]
        t = self.u[i] * w[j] - self.u[j] * w[i]
        if is_exact([determinant, s, t]):
            exact = Fraction(determinant)  # type: ignore[arg-type]
            return Fraction(s) / exact, Fraction(t) / exact  # type: ignore[arg-type]
        return s / determinant, t / determinant


@dataclass(frozen=True)
class FlatPair:
    """Two boundary segments of one plane section, not on one line.

    `first` and `second` are oriented the same way around the section
    polygon. `parallel` flags pairs whose carrier lines only meet at
    infinity.
    """

    first: FlatPiece
    second: FlatPiece
    section: Section
    parallel: bool
