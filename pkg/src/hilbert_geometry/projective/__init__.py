"""Homogeneous coordinates, cross ratios and harmonic constructions."""
from __future__ import annotations

from .cross_ratio import (
    cross_ratio,
    cross_ratio_of,
    cross_ratio_of_scalars,
    separates,
)
from .harmonic import (
    VonStaudtCoordinate,
    analytic_coordinate,
    default_auxiliaries,
    harmonic_conjugate_analytic,
    harmonic_conjugate_synthetic,
    point_at_coordinate,
    von_staudt_coordinate,
)
from .types import (
    INFINITY,
    CollinearQuad,
    Collineation,
    ProjectiveLine,
    ProjectivePoint,
    ProjectiveScalar,
    apply_collineation,
    collinear,
    join,
    meet,
)

__all__ = (
    "INFINITY",
    "CollinearQuad",
    "Collineation",
    "ProjectiveLine",
    "ProjectivePoint",
    "ProjectiveScalar",
    "VonStaudtCoordinate",
    "analytic_coordinate",
    "apply_collineation",
    "collinear",
    "cross_ratio",
    "cross_ratio_of",
    "cross_ratio_of_scalars",
    "default_auxiliaries",
    "harmonic_conjugate_analytic",
    "harmonic_conjugate_synthetic",
    "join",
    "meet",
    "point_at_coordinate",
    "separates",
    "von_staudt_coordinate",
)
