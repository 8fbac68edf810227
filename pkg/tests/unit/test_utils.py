"""Tests for `hilbert_geometry.utils`."""
from __future__ import annotations

import dataclasses
from fractions import Fraction

from hilbert_geometry import utils


def test_case_insensitive_string_compare() -> None:
    """Whitespace and case are ignored."""
    assert utils.case_insensitive_string_compare(" Test ", "test")
    assert not utils.case_insensitive_string_compare("test", "prod")


def test_dataclass_as_dict_shallow() -> None:
    """Values are not copied, `None` optionally dropped."""

    @dataclasses.dataclass()
    class Row:
        values: list[int]
        note: str | None = None

    row = Row([1, 2])
    as_dict = utils.dataclass_as_dict_shallow(row)
    assert as_dict == {"values": [1, 2], "note": None}
    assert as_dict["values"] is row.values
    assert utils.dataclass_as_dict_shallow(row, exclude_none=True) == {"values": [1, 2]}


def test_format_scalar() -> None:
    """Exact values print exactly."""
    assert utils.format_scalar(Fraction(5, 2)) == "5/2"
    assert utils.format_scalar(7) == "7"
    assert utils.format_scalar(0.1 + 0.2) == "0.3"
    assert utils.format_scalar(1 - 2j, digits=3) == "1-2j"


def test_format_point() -> None:
    """Parenthesized and comma separated."""
    assert utils.format_point((Fraction(1, 2), 0, 1.5)) == "(1/2, 0, 1.5)"
