"""Small-dimension linear algebra over floats, complex numbers and exact
rationals.

Float and complex work is delegated to `numpy`. As soon as any operand is a
`fractions.Fraction` the exact routines here are used instead, since numpy
has no exact rational solver; these keep every intermediate value a
`Fraction` so predicates built on them are decided without rounding.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, Union

import numpy as np

from hilbert_geometry import settings
from hilbert_geometry.exceptions import DimensionMismatchError, SpecificationError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from typing import TypeAlias

__all__ = (
    "ArithmeticMode",
    "Matrix",
    "Scalar",
    "Vector",
    "add",
    "coerce_point",
    "coerce_scalar",
    "cross3",
    "det",
    "dot",
    "inverse",
    "is_exact",
    "is_zero",
    "matmul",
    "matvec",
    "max_abs",
    "max_minor",
    "scale",
    "solve",
    "sub",
    "to_float_point",
)

Scalar: TypeAlias = Union[int, float, Fraction, complex]
Vector: TypeAlias = "tuple[Scalar, ...]"
Matrix: TypeAlias = "tuple[tuple[Scalar, ...], ...]"


class ArithmeticMode(str, Enum):
    """Number system a computation is carried out in."""

    FLOAT = "float"
    """IEEE doubles, for metric computation."""
    RATIONAL = "rational"
    """Exact `Fraction`s, for synthetic constructions and predicates."""


def coerce_scalar(value: Scalar | str, mode: ArithmeticMode | str = ArithmeticMode.FLOAT) -> Scalar:
    """Convert a number, or a `"p/q"` string, to the mode's number type.

    Complex values are passed through in float mode.

    Raises:
        SpecificationError: if the value can't be read as a number.
    """
    mode = ArithmeticMode(mode)
    if isinstance(value, complex):
        if mode is ArithmeticMode.RATIONAL:
            raise SpecificationError("complex values have no exact rational form")
        return value
    try:
        exact = value if isinstance(value, Fraction) else Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SpecificationError(f"not a number: {value!r}") from exc
    if mode is ArithmeticMode.RATIONAL:
        return exact
    return float(exact)


def coerce_point(
    values: Iterable[Scalar | str], mode: ArithmeticMode | str = ArithmeticMode.FLOAT
) -> Vector:
    """Coerce every coordinate of a point, see `coerce_scalar()`."""
    return tuple(coerce_scalar(v, mode) for v in values)


def to_float_point(values: Iterable[Scalar]) -> tuple[float, ...]:
    """Drop exactness, e.g. for rendering or numpy work."""
    return tuple(float(v) for v in values)  # type: ignore[arg-type]


def is_exact(values: Iterable[Scalar]) -> bool:
    """True when every value is an `int` or a `Fraction`."""
    return all(isinstance(v, (int, Fraction)) for v in values)


def _flatten(rows: Iterable[Iterable[Scalar]]) -> list[Scalar]:
    return [v for row in rows for v in row]


def is_zero(value: Scalar, magnitude: float = 1.0) -> bool:
    """Zero test: exact for rationals, relative to `magnitude` for floats."""
    if isinstance(value, (int, Fraction)):
        return value == 0
    return abs(value) <= settings.geometry.ZERO_TOL * max(magnitude, 1e-300)


def max_abs(values: Iterable[Scalar]) -> float:
    """Largest magnitude among `values`, `0.0` for none."""
    return max((float(abs(v)) for v in values), default=0.0)


def _check_same_length(*vectors: Sequence[Scalar]) -> None:
    if len({len(v) for v in vectors}) > 1:
        raise DimensionMismatchError(f"vector lengths differ: {[len(v) for v in vectors]}")


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """Bilinear (not Hermitian) product."""
    _check_same_length(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0) if is_exact([*u, *v]) else 0.0)


def add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """Componentwise sum."""
    _check_same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """Componentwise difference `u - v`."""
    _check_same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(factor: Scalar, u: Sequence[Scalar]) -> Vector:
    """Multiply every component by `factor`."""
    return tuple(factor * a for a in u)


def cross3(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """Cross product of two 3-vectors.

    In homogeneous plane coordinates this is both the join of two points and
    the meet of two lines.
    """
    if len(u) != 3 or len(v) != 3:
        raise DimensionMismatchError("cross product needs 3-vectors")
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def matvec(matrix: Sequence[Sequence[Scalar]], u: Sequence[Scalar]) -> Vector:
    """Matrix-vector product."""
    if any(len(row) != len(u) for row in matrix):
        raise DimensionMismatchError(f"matrix columns don't match vector length {len(u)}")
    return tuple(dot(row, u) for row in matrix)


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    """Matrix product `a @ b`."""
    columns = list(zip(*b))
    if any(len(row) != len(columns[0]) for row in b) or any(len(row) != len(b) for row in a):
        raise DimensionMismatchError("matrix shapes don't compose")
    return tuple(tuple(dot(row, col) for col in columns) for row in a)


def _exact_eliminate(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Sequence[Scalar]]
) -> tuple[Fraction, list[list[Fraction]]]:
    """Gauss-Jordan elimination over `Fraction`.

    Returns:
        The determinant of `matrix` and, if it is non-zero, the solution
        columns for `rhs` (one row per unknown).
    """
    n = len(matrix)
    work = [
        [Fraction(v) for v in row] + [Fraction(r[i]) for r in rhs]  # type: ignore[arg-type]
        for i, row in enumerate(matrix)
    ]
    determinant = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0), []
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            determinant = -determinant
        determinant *= work[col][col]
        inv = 1 / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return determinant, [row[n:] for row in work]


def _check_square(matrix: Sequence[Sequence[Scalar]]) -> None:
    if any(len(row) != len(matrix) for row in matrix):
        raise DimensionMismatchError("matrix is not square")


def det(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant, exact when every entry is rational."""
    _check_square(matrix)
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if n == 3:
        return dot(matrix[0], cross3(matrix[1], matrix[2]))
    entries = _flatten(matrix)
    if is_exact(entries):
        return _exact_eliminate(matrix, [])[0]
    if any(isinstance(v, complex) for v in entries):
        return complex(np.linalg.det(np.array(matrix, dtype=complex)))
    return float(np.linalg.det(np.array(matrix, dtype=float)))


def solve(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> Vector | None:
    """Solve `matrix @ x = rhs`.

    Returns:
        The solution, or `None` for a singular system.
    """
    _check_square(matrix)
    if len(rhs) != len(matrix):
        raise DimensionMismatchError("right hand side length doesn't match the matrix")
    if is_exact([*_flatten(matrix), *rhs]):
        determinant, columns = _exact_eliminate(matrix, [rhs])
        if determinant == 0:
            return None
        return tuple(row[0] for row in columns)
    array = np.array(matrix, dtype=float)
    if np.linalg.cond(array) * settings.geometry.ZERO_TOL > 1:
        return None
    return tuple(float(v) for v in np.linalg.solve(array, np.array(rhs, dtype=float)))


def inverse(matrix: Sequence[Sequence[Scalar]]) -> Matrix | None:
    """Matrix inverse, or `None` when singular."""
    _check_square(matrix)
    n = len(matrix)
    if is_exact(_flatten(matrix)):
        identity = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        determinant, columns = _exact_eliminate(matrix, identity)
        if determinant == 0:
            return None
        return tuple(tuple(row) for row in columns)
    array = np.array(matrix, dtype=float)
    if np.linalg.cond(array) * settings.geometry.ZERO_TOL > 1:
        return None
    return tuple(tuple(float(v) for v in row) for row in np.linalg.inv(array))


def max_minor(rows: Sequence[Sequence[Scalar]], order: int) -> Scalar:
    """Largest (in magnitude) `order` x `order` minor of a row stack.

    Zero exactly when the rows span fewer than `order` dimensions.
    """
    best: Scalar = 0
    width = len(rows[0])
    for row_idx in combinations(range(len(rows)), order):
        for col_idx in combinations(range(width), order):
            minor = det([[rows[r][c] for c in col_idx] for r in row_idx])
            if abs(minor) > abs(best):
                best = minor
    return best
