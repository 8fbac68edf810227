"""Hilbert-geometry exception types.

Also, defines the function that translates library exceptions into
command line exit codes.
"""
from __future__ import annotations

from hilbert_geometry.constants import (
    EXIT_GEOMETRY_ERROR,
    EXIT_NUMERIC_ERROR,
    EXIT_PARSE_ERROR,
)

__all__ = (
    "AbsoluteSignatureError",
    "CoincidentPointsError",
    "CollinearTripleError",
    "DegenerateAuxiliaryError",
    "DegenerateConstructionError",
    "DegenerateFrameError",
    "DegenerateInputError",
    "DimensionMismatchError",
    "EmptyInteriorError",
    "GeometryError",
    "HilbertGeometryError",
    "IndeterminateCrossRatioError",
    "InfeasibleFlatsError",
    "LineInAbsoluteError",
    "NonCollinearError",
    "NotNestedError",
    "NumericalInstabilityError",
    "NumericallyUnstableError",
    "OutOfRangeError",
    "OutsideDomainError",
    "PointOnHyperplaneError",
    "PointsNotInteriorError",
    "SpecificationError",
    "TangentDegenerateError",
    "TangentError",
    "UnboundedBodyError",
    "UnsupportedPairError",
    "ZeroDirectionError",
    "exception_to_exit_code",
)


class HilbertGeometryError(Exception):
    """Base exception type for the lib's custom exception types."""


class SpecificationError(HilbertGeometryError, ValueError):
    """A body, point or number specification could not be parsed."""


class GeometryError(HilbertGeometryError):
    """Base exception type for failed geometric preconditions."""


class NumericalInstabilityError(HilbertGeometryError):
    """Base exception type for results that would be numerically meaningless."""


class NonCollinearError(GeometryError):
    """Points expected on one line are not."""


class IndeterminateCrossRatioError(GeometryError):
    """The cross ratio evaluates to 0/0."""


class DimensionMismatchError(GeometryError, ValueError):
    """Operands live in spaces of different dimension."""


class DegenerateInputError(GeometryError):
    """Input points coincide where they must be distinct."""


class DegenerateAuxiliaryError(GeometryError):
    """Auxiliary points of a synthetic construction are unusable.

    Retry with another auxiliary pair.
    """


class DegenerateFrameError(GeometryError):
    """The projective frame points are not distinct."""


class PointsNotInteriorError(GeometryError):
    """A point is on the boundary or outside of the body."""

    def __init__(self, message: str = "points must be interior") -> None:
        """

        Args:
            message: diagnostic, the default is what the CLI prints.
        """
        super().__init__(message)


class CoincidentPointsError(GeometryError):
    """Two points that must differ are equal."""


class UnboundedBodyError(GeometryError):
    """The half-spaces do not bound a region."""


class EmptyInteriorError(GeometryError):
    """The body has no interior point."""


class UnsupportedPairError(GeometryError):
    """No exact containment test exists for these body types."""


class OutOfRangeError(GeometryError):
    """A parameter is outside of its valid range."""


class CollinearTripleError(GeometryError):
    """A triangle was requested for three aligned points."""


class DegenerateConstructionError(GeometryError):
    """Chords share an endpoint; perturb one of the points slightly."""


class InfeasibleFlatsError(GeometryError):
    """No triangle with chord ends inside both flats was found."""


class NotNestedError(GeometryError):
    """The inner body is not contained in the outer body."""


class LineInAbsoluteError(GeometryError):
    """The whole line lies on the absolute quadric."""


class TangentError(GeometryError):
    """The line is tangent to the absolute quadric."""


class TangentDegenerateError(TangentError):
    """Tangency leaves the metric direction undefined."""


class AbsoluteSignatureError(GeometryError):
    """The quadric has the wrong inertia for the requested metric."""


class OutsideDomainError(GeometryError):
    """A point is not inside the domain bounded by the absolute."""


class ZeroDirectionError(GeometryError):
    """A line direction is the zero vector."""


class PointOnHyperplaneError(GeometryError):
    """A point that must be off the hyperplane lies on it."""


class NumericallyUnstableError(NumericalInstabilityError):
    """A point is too close to the boundary for a meaningful distance."""


def exception_to_exit_code(exc: HilbertGeometryError) -> int:
    """Transform library exceptions to command line exit codes.

    Args:
        exc: Exception raised while running the command.

    Returns:
        Exit code appropriate to the type of the exception.
    """
    if isinstance(exc, SpecificationError):
        return EXIT_PARSE_ERROR
    if isinstance(exc, NumericalInstabilityError):
        return EXIT_NUMERIC_ERROR
    return EXIT_GEOMETRY_ERROR
