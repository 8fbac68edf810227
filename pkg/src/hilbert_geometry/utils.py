"""General utility functions."""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from hilbert_geometry.type_encoders import format_fraction

if TYPE_CHECKING:
    from collections.abc import Iterable

    from hilbert_geometry.linalg import Scalar

__all__ = (
    "case_insensitive_string_compare",
    "dataclass_as_dict_shallow",
    "format_point",
    "format_scalar",
)


def case_insensitive_string_compare(a: str, b: str, /) -> bool:
    """Compare `a` and `b`, stripping whitespace and ignoring case."""
    return a.strip().lower() == b.strip().lower()


def dataclass_as_dict_shallow(dataclass: Any, *, exclude_none: bool = False) -> dict[str, Any]:
    """Convert a dataclass to dict, without deepcopy."""
    ret: dict[str, Any] = {}
    for field in dataclasses.fields(dataclass):
        value = getattr(dataclass, field.name)
        if exclude_none and value is None:
            continue
        ret[field.name] = value
    return ret


def format_scalar(value: Scalar, digits: int = 12) -> str:
    """Render a number for diagnostics: `"p/q"` when exact, else `digits` significant digits."""
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, complex):
        return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"
    return f"{value:.{digits}g}"


def format_point(point: Iterable[Scalar]) -> str:
    """Render a point as `"(x, y, ...)"`."""
    return "(" + ", ".join(format_scalar(v) for v in point) + ")"
