"""Tests for exception translation behavior."""
import pytest

from hilbert_geometry import exceptions
from hilbert_geometry.exceptions import (
    DimensionMismatchError,
    GeometryError,
    HilbertGeometryError,
    NumericallyUnstableError,
    NumericalInstabilityError,
    PointsNotInteriorError,
    SpecificationError,
    TangentDegenerateError,
    TangentError,
    exception_to_exit_code,
)


@pytest.mark.parametrize(
    ("exc", "code"),
    [
        (SpecificationError, 2),
        (GeometryError, 3),
        (PointsNotInteriorError, 3),
        (DimensionMismatchError, 3),
        (TangentDegenerateError, 3),
        (NumericalInstabilityError, 4),
        (NumericallyUnstableError, 4),
        (HilbertGeometryError, 3),
    ],
)
def test_exception_to_exit_code(exc: type[HilbertGeometryError], code: int) -> None:
    """Test translation of library exceptions to command line exit codes."""
    assert exception_to_exit_code(exc("message")) == code


def test_every_exported_error_has_an_exit_code() -> None:
    """All the lib's exceptions derive from the base type."""
    for name in exceptions.__all__:
        obj = getattr(exceptions, name)
        if isinstance(obj, type):
            assert issubclass(obj, HilbertGeometryError)
            assert exception_to_exit_code(obj()) in {2, 3, 4}


def test_value_errors() -> None:
    """Bad arguments can be caught the standard way too."""
    assert issubclass(SpecificationError, ValueError)
    assert issubclass(DimensionMismatchError, ValueError)
    assert issubclass(TangentDegenerateError, TangentError)
