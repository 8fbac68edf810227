"""Serializer hooks for the numeric types msgspec doesn't know."""
from __future__ import annotations

from fractions import Fraction
from typing import Any

__all__ = ("enc_hook", "format_fraction")


def format_fraction(value: Fraction) -> str:
    """Render an exact rational as `"p/q"`, or `"p"` for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def enc_hook(obj: Any) -> Any:
    """`msgspec` encoder hook.

    Args:
        obj: value msgspec can't encode natively.

    Returns:
        `"p/q"` for a `Fraction`, `[re, im]` for a `complex`.

    Raises:
        NotImplementedError: for any other type.
    """
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise NotImplementedError(f"Objects of type {type(obj)!r} are not supported")
