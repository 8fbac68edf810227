"""Number formatting and tables for command output."""
from __future__ import annotations

import csv
import io
import math
from fractions import Fraction
from typing import TYPE_CHECKING

import msgspec

from hilbert_geometry import settings
from hilbert_geometry.projective import ProjectivePoint, ProjectiveScalar
from hilbert_geometry.type_encoders import enc_hook, format_fraction

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence
    from typing import Any

    from hilbert_geometry.linalg import Scalar

__all__ = (
    "INFINITY_TOKEN",
    "coordinate_names",
    "csv_table",
    "encode_json",
    "format_point",
    "format_projective",
    "format_value",
)

INFINITY_TOKEN = "inf"
"""Rendering of the point at infinity."""

json_encoder = msgspec.json.Encoder(enc_hook=enc_hook)


def format_value(value: Scalar | ProjectiveScalar, digits: int | None = None) -> str:
    """Fixed-point with `digits` significant digits, `p/q` when exact.

    Zero keeps the full width, `0.000000000000` for twelve digits, and
    magnitudes the fixed format can't hold fall back to exponent notation.
    """
    digits = digits if digits is not None else settings.cli.SIGNIFICANT_DIGITS
    if isinstance(value, ProjectiveScalar):
        if value.is_infinite:
            return INFINITY_TOKEN
        value = value.finite()
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, complex):
        return f"{format_value(value.real, digits)}{value.imag:+.{digits}g}j"
    value = float(value)
    if math.isinf(value):
        return INFINITY_TOKEN if value > 0 else f"-{INFINITY_TOKEN}"
    if value == 0:
        return f"{0.0:.{digits}f}"
    decimals = digits - 1 - math.floor(math.log10(abs(value)))
    if 0 <= decimals <= 2 * digits:
        return f"{value:.{decimals}f}"
    return f"{value:.{digits - 1}e}"


def format_point(point: Iterable[Scalar], separator: str = " ") -> str:
    """Coordinates joined by `separator`."""
    return separator.join(format_value(v) for v in point)


def format_projective(point: ProjectivePoint) -> str:
    """Affine coordinates, or the infinity token for an ideal point."""
    if point.is_ideal:
        return INFINITY_TOKEN
    return format_point(point.affine())


def coordinate_names(dim: int) -> list[str]:
    """`x, y, z` up to three dimensions, `x1 ... xn` beyond."""
    if dim <= 3:
        return ["x", "y", "z"][:dim]
    return [f"x{i + 1}" for i in range(dim)]


def csv_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Comma separated table with a header row; numbers go through `format_value()`."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [cell if isinstance(cell, str) else format_value(cell) for cell in row]
        )
    return buffer.getvalue()


def encode_json(obj: Any) -> str:
    """JSON text of a struct, rationals as `"p/q"`."""
    return json_encoder.encode(obj).decode()
