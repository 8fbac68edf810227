"""The Hilbert metric, its geodesics and balls, and its triangle inequality."""
from __future__ import annotations

from .metric import (
    HilbertConfig,
    NestedComparison,
    ball_boundary,
    chord_cross_ratio,
    compare_nested,
    geodesic_point,
    hilbert_distance,
    hilbert_distance_from_chord,
    klein_distance,
    sample_directions,
)
from .triangle import TriangleCertificate, find_equality_triple, triangle_construction

__all__ = (
    "HilbertConfig",
    "NestedComparison",
    "TriangleCertificate",
    "ball_boundary",
    "chord_cross_ratio",
    "compare_nested",
    "find_equality_triple",
    "geodesic_point",
    "hilbert_distance",
    "hilbert_distance_from_chord",
    "klein_distance",
    "sample_directions",
    "triangle_construction",
)
