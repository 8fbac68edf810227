"""Bounded convex bodies, their chords and their flat boundary pieces."""
from __future__ import annotations

from .bodies import (
    ConvexBody,
    Ellipsoid,
    OracleBody,
    Polytope,
    PolytopeH,
    PolytopeV,
    chord,
    classify,
    is_nested,
)
from .flats import degenerate_flats
from .types import Chord, FlatPair, FlatPiece, Halfspace, PointClass, Section

__all__ = (
    "Chord",
    "ConvexBody",
    "Ellipsoid",
    "FlatPair",
    "FlatPiece",
    "Halfspace",
    "OracleBody",
    "PointClass",
    "Polytope",
    "PolytopeH",
    "PolytopeV",
    "Section",
    "chord",
    "classify",
    "degenerate_flats",
    "is_nested",
)
