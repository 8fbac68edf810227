"""Projective domain types."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from hilbert_geometry import settings
from hilbert_geometry.exceptions import (
    DegenerateInputError,
    DimensionMismatchError,
    NonCollinearError,
)
from hilbert_geometry.linalg import (
    cross3,
    det,
    dot,
    inverse,
    is_exact,
    is_zero,
    matmul,
    matvec,
    max_abs,
    max_minor,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from hilbert_geometry.linalg import Matrix, Scalar, Vector

__all__ = (
    "INFINITY",
    "CollinearQuad",
    "Collineation",
    "ProjectiveLine",
    "ProjectivePoint",
    "ProjectiveScalar",
    "apply_collineation",
    "collinear",
    "join",
    "meet",
    "proportional",
)


def _normalized(vector: Sequence[Scalar]) -> Vector:
    """Scale so the largest entry has magnitude one, exactly for rationals."""
    biggest = max(vector, key=abs)
    magnitude = abs(biggest)
    if magnitude == 0:
        return tuple(vector)
    if is_exact(vector):
        return tuple(Fraction(v) / Fraction(magnitude) for v in vector)  # type: ignore[arg-type]
    return tuple(v / magnitude for v in vector)


def proportional(u: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    """True when `u` and `v` differ by a non-zero factor."""
    if len(u) != len(v):
        return False
    minor = max_minor([_normalized(u), _normalized(v)], 2)
    if is_exact([*u, *v]):
        return minor == 0
    return abs(minor) <= settings.geometry.COLLINEAR_TOL


@dataclass(frozen=True)
class ProjectiveScalar:
    """A point of the projective line in its standard chart.

    Either a finite (real or complex) value, or the point at infinity.
    """

    value: Scalar | None = None
    """Finite value, `None` at infinity."""

    @classmethod
    def infinity(cls) -> ProjectiveScalar:
        """The point at infinity."""
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        """True for the point at infinity."""
        return self.value is None

    def finite(self) -> Scalar:
        """The finite value.

        Raises:
            DegenerateInputError: at infinity.
        """
        if self.value is None:
            raise DegenerateInputError("the point at infinity has no finite value")
        return self.value

    def to_point(self) -> ProjectivePoint:
        """Homogeneous coordinates `(1, x)`, or `(0, 1)` at infinity."""
        if self.value is None:
            return ProjectivePoint((0, 1))
        one = Fraction(1) if is_exact([self.value]) else 1.0
        return ProjectivePoint((one, self.value))

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


INFINITY = ProjectiveScalar.infinity()


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """Homogeneous coordinates of a point of n-dimensional projective space.

    The homogenizing coordinate comes first: the affine point `x` is
    `(1, x_1, ..., x_n)` and points with a zero first coordinate are ideal.
    Equality is proportionality of the coordinates.
    """

    coords: Vector
    """`n + 1` real, complex or rational components, not all zero."""

    def __post_init__(self) -> None:
        if len(self.coords) < 2:
            raise DimensionMismatchError("a projective point needs at least two coordinates")
        if all(c == 0 for c in self.coords):
            raise DegenerateInputError("all homogeneous coordinates are zero")
        object.__setattr__(self, "coords", tuple(self.coords))

    @classmethod
    def from_affine(cls, point: Iterable[Scalar]) -> ProjectivePoint:
        """Lift an affine point to `(1, *point)`."""
        values = tuple(point)
        one = Fraction(1) if is_exact(values) else 1.0
        return cls((one, *values))

    @classmethod
    def ideal(cls, direction: Iterable[Scalar]) -> ProjectivePoint:
        """The point at infinity in `direction`."""
        values = tuple(direction)
        zero = Fraction(0) if is_exact(values) else 0.0
        return cls((zero, *values))

    @property
    def dim(self) -> int:
        """Dimension of the projective space."""
        return len(self.coords) - 1

    @property
    def is_exact(self) -> bool:
        """True when every coordinate is rational."""
        return is_exact(self.coords)

    @property
    def is_ideal(self) -> bool:
        """True for points at infinity of the affine chart `x_0 != 0`."""
        return is_zero(self.coords[0], max_abs(self.coords))

    def affine(self) -> Vector:
        """Affine coordinates.

        Raises:
            DegenerateInputError: for ideal points.
        """
        if self.is_ideal:
            raise DegenerateInputError("ideal points have no affine coordinates")
        head = self.coords[0]
        return tuple(c / head for c in self.coords[1:])

    def chart_value(self) -> ProjectiveScalar:
        """Value in the standard chart of the projective line.

        Raises:
            DimensionMismatchError: unless the point is on a projective line.
        """
        if self.dim != 1:
            raise DimensionMismatchError("chart values exist on the projective line only")
        if self.is_ideal:
            return INFINITY
        return ProjectiveScalar(self.coords[1] / self.coords[0])

    def normalized(self) -> ProjectivePoint:
        """Representative whose largest component has magnitude one."""
        return ProjectivePoint(_normalized(self.coords))

    def combine(self, other: ProjectivePoint, a: Scalar, b: Scalar) -> ProjectivePoint:
        """The point `a * self + b * other` of the line through both."""
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimensions {self.dim} and {other.dim} differ")
        return ProjectivePoint(tuple(a * p + b * q for p, q in zip(self.coords, other.coords)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return proportional(self.coords, other.coords)

    def __hash__(self) -> int:
        # equality is proportionality across float and exact coordinates
        return hash(self.dim)

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True, eq=False)
class ProjectiveLine:
    """A line of the projective plane, by its dual coordinates.

    The point `P` is on the line when `dot(line.coords, P.coords) == 0`.
    """

    coords: Vector

    def __post_init__(self) -> None:
        if len(self.coords) != 3:
            raise DimensionMismatchError("lines by dual coordinates live in the plane")
        if all(c == 0 for c in self.coords):
            raise DegenerateInputError("all line coordinates are zero")

    def contains(self, point: ProjectivePoint) -> bool:
        """Incidence, exact for rational coordinates."""
        value = dot(_normalized(self.coords), point.normalized().coords)
        if is_exact([*self.coords, *point.coords]):
            return value == 0
        return abs(value) <= settings.geometry.COLLINEAR_TOL

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectiveLine):
            return NotImplemented
        return proportional(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash(len(self.coords))


def collinear(*points: ProjectivePoint) -> bool:
    """True when the points span at most a line.

    Float coordinates are normalized first and the largest 3x3 minor is
    compared with `settings.geometry.COLLINEAR_TOL`.

    Raises:
        DimensionMismatchError: for points of different dimensions.
    """
    if len({p.dim for p in points}) > 1:
        raise DimensionMismatchError("points live in spaces of different dimension")
    if len(points) < 3 or points[0].dim == 1:
        return True
    rows = [p.normalized().coords for p in points]
    minor = max_minor(rows, 3)
    if all(p.is_exact for p in points):
        return minor == 0
    return abs(minor) <= settings.geometry.COLLINEAR_TOL


@dataclass(frozen=True, eq=False)
class Collineation:
    """An invertible projective transformation, by its matrix up to scale."""

    matrix: Matrix

    def __post_init__(self) -> None:
        matrix = tuple(tuple(row) for row in self.matrix)
        if len(matrix) < 2 or any(len(row) != len(matrix) for row in matrix):
            raise DimensionMismatchError("a collineation needs a square matrix of size >= 2")
        magnitude = max_abs(v for row in matrix for v in row) ** len(matrix)
        if is_zero(det(matrix), magnitude):
            raise DegenerateInputError("collineation matrix is singular")
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls, dim: int, *, exact: bool = False) -> Collineation:
        """Identity of n-dimensional projective space."""
        one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
        size = range(dim + 1)
        return cls(tuple(tuple(one if i == j else zero for j in size) for i in size))

    @classmethod
    def affine(
        cls, linear: Sequence[Sequence[Scalar]], translation: Sequence[Scalar]
    ) -> Collineation:
        """The affine map `x -> linear @ x + translation`."""
        values = [*translation, *(v for row in linear for v in row)]
        one, zero = (Fraction(1), Fraction(0)) if is_exact(values) else (1.0, 0.0)
        head = (one, *(zero for _ in translation))
        rows = tuple((t, *row) for t, row in zip(translation, linear))
        return cls((head, *rows))

    @property
    def dim(self) -> int:
        """Dimension of the projective space acted on."""
        return len(self.matrix) - 1

    def inverse(self) -> Collineation:
        """The inverse transformation."""
        inv = inverse(self.matrix)
        if inv is None:  # pragma: no cover
            raise DegenerateInputError("collineation matrix is singular")
        return Collineation(inv)

    def transpose(self) -> Matrix:
        """Transposed matrix, used to move quadrics along."""
        return tuple(zip(*self.matrix))

    def __matmul__(self, other: Collineation) -> Collineation:
        """Composition, `(g @ h)(P) == g(h(P))`."""
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimensions {self.dim} and {other.dim} differ")
        return Collineation(matmul(self.matrix, other.matrix))

    def __call__(self, point: ProjectivePoint) -> ProjectivePoint:
        return apply_collineation(self, point)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Collineation):
            return NotImplemented
        flat = [v for row in self.matrix for v in row]
        other_flat = [v for row in other.matrix for v in row]
        return proportional(flat, other_flat)

    def __hash__(self) -> int:
        return hash(self.dim)


def apply_collineation(g: Collineation, point: ProjectivePoint) -> ProjectivePoint:
    """Image of `point` under `g`.

    Raises:
        DimensionMismatchError: if `g` and `point` act on different spaces.
    """
    if g.dim != point.dim:
        raise DimensionMismatchError(
            f"collineation of dimension {g.dim} applied to a point of dimension {point.dim}"
        )
    return ProjectivePoint(matvec(g.matrix, point.coords))


@dataclass(frozen=True)
class CollinearQuad:
    """Four points of one projective line, in order."""

    points: tuple[ProjectivePoint, ProjectivePoint, ProjectivePoint, ProjectivePoint]
    carrier: tuple[ProjectivePoint, ProjectivePoint] = field(init=False, compare=False)
    """Two distinct points of the quad spanning its line."""

    def __post_init__(self) -> None:
        if len(self.points) != 4:
            raise DimensionMismatchError("a quad has exactly four points")
        if not collinear(*self.points):
            raise NonCollinearError("the four points are not on one line")
        carrier = next(
            (
                (p, q)
                for i, p in enumerate(self.points)
                for q in self.points[i + 1 :]
                if p != q
            ),
            None,
        )
        if carrier is None:
            raise DegenerateInputError("all four points coincide")
        object.__setattr__(self, "carrier", carrier)

    @classmethod
    def of(
        cls, x: ProjectivePoint, y: ProjectivePoint, z: ProjectivePoint, t: ProjectivePoint
    ) -> CollinearQuad:
        """Build from four positional points."""
        return cls((x, y, z, t))

    def transformed(self, g: Collineation) -> CollinearQuad:
        """Apply `g` to all four points."""
        x, y, z, t = (apply_collineation(g, p) for p in self.points)
        return CollinearQuad((x, y, z, t))


def join(p: ProjectivePoint, q: ProjectivePoint) -> ProjectiveLine:
    """Join of two distinct points of the projective plane."""
    if p.dim != 2 or q.dim != 2:
        raise DimensionMismatchError("joins by cross product need points of the plane")
    vector = cross3(p.normalized().coords, q.normalized().coords)
    if all(is_zero(v) for v in vector):
        raise DegenerateInputError("the points coincide, their join is undefined")
    return ProjectiveLine(vector)


def meet(l: ProjectiveLine, m: ProjectiveLine) -> ProjectivePoint:
    """Meet of two distinct lines of the projective plane."""
    vector = cross3(_normalized(l.coords), _normalized(m.coords))
    if all(is_zero(v) for v in vector):
        raise DegenerateInputError("the lines coincide, their meet is undefined")
    return ProjectivePoint(vector)
