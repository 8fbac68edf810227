"""Tests for `hilbert_geometry.hilbert`."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from pydantic import ValidationError

from hilbert_geometry.axioms import collinear
from hilbert_geometry.convex import Ellipsoid, Polytope, PolytopeV, chord, degenerate_flats
from hilbert_geometry.exceptions import (
    CoincidentPointsError,
    CollinearTripleError,
    DimensionMismatchError,
    NotNestedError,
    NumericallyUnstableError,
    OutOfRangeError,
    OutsideDomainError,
    PointsNotInteriorError,
)
from hilbert_geometry.hilbert import (
    HilbertConfig,
    ball_boundary,
    chord_cross_ratio,
    compare_nested,
    find_equality_triple,
    geodesic_point,
    hilbert_distance,
    klein_distance,
    sample_directions,
    triangle_construction,
)
from hilbert_geometry.projective import Collineation
from hilbert_geometry.testing import geometry_tolerances

F = Fraction

UNIT_DISK = Ellipsoid((0.0, 0.0), ((1.0, 0.0), (0.0, 1.0)))
INNER_SQUARE = PolytopeV([(-0.7, -0.7), (0.7, -0.7), (0.7, 0.7), (-0.7, 0.7)])
INNER_OCTAGON = PolytopeV(
    [(0.95 * math.cos(k * math.pi / 4), 0.95 * math.sin(k * math.pi / 4)) for k in range(8)]
)
INNER_ELLIPSE = Ellipsoid((0.0, 0.0), ((0.85, 0.0), (0.0, 0.75)))
OUTER_SQUARE = PolytopeV([(-1.2, -1.2), (1.2, -1.2), (1.2, 1.2), (-1.2, 1.2)])
NESTED_PAIRS = [
    (INNER_SQUARE, UNIT_DISK),
    (INNER_OCTAGON, UNIT_DISK),
    (INNER_ELLIPSE, UNIT_DISK),
    (UNIT_DISK, OUTER_SQUARE),
    (INNER_ELLIPSE, OUTER_SQUARE),
]

coords = st.floats(min_value=-0.6, max_value=0.6, allow_nan=False, allow_infinity=False)
points = st.tuples(coords, coords)


def random_interior(rng: np.random.Generator, radius: float) -> tuple[float, float]:
    """Uniform-ish point of the disk of `radius`."""
    angle, size = rng.uniform(0, 2 * math.pi), radius * math.sqrt(rng.uniform(0, 1))
    return size * math.cos(angle), size * math.sin(angle)


def rational_interior(rng: np.random.Generator, body: Polytope) -> tuple[Fraction, ...]:
    """Exact point strictly inside, a positive rational blend of the vertices."""
    weights = [F(int(w)) for w in rng.integers(1, 10, size=len(body.vertices))]
    total = sum(weights)
    return tuple(
        sum(w * vertex[i] for w, vertex in zip(weights, body.vertices)) / total
        for i in range(body.dim)
    )


def test_config_defaults() -> None:
    """Scale one half unless asked otherwise."""
    assert HilbertConfig().scale == 0.5
    assert HilbertConfig.original().scale == 1.0


def test_config_validation() -> None:
    """Scales are positive and configs are frozen."""
    with pytest.raises(ValidationError):
        HilbertConfig(scale=0)
    cfg = HilbertConfig()
    with pytest.raises(TypeError):
        cfg.scale = 2.0  # type: ignore[misc]


def test_config_follows_settings() -> None:
    """The default scale is read when the config is built."""
    with geometry_tolerances(HILBERT_SCALE=1.0):
        assert HilbertConfig().scale == 1.0


def test_distance_in_disk(disk: Ellipsoid) -> None:
    """`d((0, 0), (1/2, 0)) = artanh(1/2)`."""
    assert hilbert_distance(disk, (0.0, 0.0), (0.5, 0.0)) == pytest.approx(math.atanh(0.5))
    assert hilbert_distance(disk, (0.0, 0.0), (0.5, 0.0)) == pytest.approx(0.549306144334)


def test_distance_scale(disk: Ellipsoid) -> None:
    """The plain log cross ratio is twice the default."""
    plain = hilbert_distance(disk, (0.0, 0.0), (0.5, 0.0), HilbertConfig.original())
    assert plain == pytest.approx(math.log(3.0))


def test_distance_in_triangle_is_exact(triangle: PolytopeV) -> None:
    """Chord `(0, 1), (1, 1), (2, 1), (3, 1)` has cross ratio exactly 4."""
    a, b = (F(1), F(1)), (F(2), F(1))
    assert chord_cross_ratio(chord(triangle, a, b)) == 4
    assert hilbert_distance(triangle, a, b) == pytest.approx(math.log(2.0))


def test_distance_of_point_to_itself(disk: Ellipsoid) -> None:
    """Zero, for interior points only."""
    assert hilbert_distance(disk, (0.3, 0.1), (0.3, 0.1)) == 0.0
    with pytest.raises(PointsNotInteriorError):
        hilbert_distance(disk, (1.0, 0.0), (1.0, 0.0))


def test_distance_errors(disk: Ellipsoid) -> None:
    """Boundary points are rejected, points hugging it are unstable."""
    with pytest.raises(PointsNotInteriorError):
        hilbert_distance(disk, (0.0, 0.0), (1.0, 0.0))
    with pytest.raises(NumericallyUnstableError):
        hilbert_distance(disk, (0.0, 0.0), (1.0 - 1e-15, 0.0))
    with pytest.raises(DimensionMismatchError):
        hilbert_distance(disk, (0.0, 0.0), (0.5, 0.0, 0.0))


def test_disk_matches_klein_model(disk: Ellipsoid) -> None:
    """The disk carries the hyperbolic metric."""
    rng = np.random.default_rng(1)
    for _ in range(50):
        a, b = random_interior(rng, 0.95), random_interior(rng, 0.95)
        assert hilbert_distance(disk, a, b) == pytest.approx(klein_distance(a, b), rel=1e-9)


def test_ball_matches_klein_model(ball3: Ellipsoid) -> None:
    """Also in space."""
    a, b = (0.1, -0.4, 0.3), (-0.5, 0.2, 0.6)
    assert hilbert_distance(ball3, a, b) == pytest.approx(klein_distance(a, b), rel=1e-9)


def test_klein_distance_domain() -> None:
    """Points inside the unit ball, of one dimension."""
    with pytest.raises(OutsideDomainError):
        klein_distance((1.0, 0.0), (0.0, 0.0))
    with pytest.raises(DimensionMismatchError):
        klein_distance((0.0, 0.0), (0.0, 0.0, 0.0))


def test_metric_axioms(float_bodies: list) -> None:
    """Symmetry and the triangle inequality on random triples."""
    rng = np.random.default_rng(2)
    for body in float_bodies:
        center = np.array(body.interior_point(), dtype=float)
        for _ in range(20):
            a, b, c = (
                tuple(center + 0.2 * np.array(random_interior(rng, 1.0))) for _ in range(3)
            )
            ab = hilbert_distance(body, a, b)
            assert ab == pytest.approx(hilbert_distance(body, b, a), rel=1e-12)
            assert ab <= hilbert_distance(body, a, c) + hilbert_distance(body, c, b) + 1e-12


def test_exact_triangles_are_certified(exact_polytopes: list) -> None:
    """Random rational triangles: the inequality holds and the certificate agrees exactly."""
    rng = np.random.default_rng(9)
    for body in exact_polytopes:
        checked = 0
        while checked < 12:
            a, c, b = (rational_interior(rng, body) for _ in range(3))
            if collinear(a, c, b):
                continue
            checked += 1
            ab = hilbert_distance(body, a, b)
            assert ab <= hilbert_distance(body, a, c) + hilbert_distance(body, c, b) + 1e-12
            certificate = triangle_construction(body, a, c, b)
            assert certificate.is_exact
            assert certificate.residuals() == (0, 0, 0)
            assert certificate.is_sound()
            assert certificate.cr_prod >= certificate.cr_ab
            assert certificate.cr_ab == chord_cross_ratio(chord(body, a, b))


def test_distance_invariant_under_collineations(triangle: PolytopeV) -> None:
    """A projective map of the body preserves cross ratios exactly."""
    g = Collineation(((F(1), F(1, 10), F(1, 20)), (F(0), F(1), F(0)), (F(0), F(0), F(1))))
    image = triangle.transformed(g)
    a, b = (F(1), F(1)), (F(1, 2), F(5, 2))

    def moved(point: tuple[Fraction, Fraction]) -> tuple[Fraction, ...]:
        return tuple(v / (1 + point[0] / 10 + point[1] / 20) for v in point)

    assert chord_cross_ratio(chord(image, moved(a), moved(b))) == chord_cross_ratio(
        chord(triangle, a, b)
    )


def test_ellipse_invariant_under_affine_maps(disk: Ellipsoid) -> None:
    """Float bodies agree up to rounding."""
    g = Collineation.affine(((2.0, 1.0), (0.0, 0.5)), (3.0, -1.0))
    image = disk.transformed(g)
    a, b = (0.2, 0.3), (-0.4, 0.1)
    moved_a, moved_b = (2.0 * 0.2 + 0.3 + 3.0, 0.15 - 1.0), (-0.8 + 0.1 + 3.0, 0.05 - 1.0)
    assert hilbert_distance(image, moved_a, moved_b) == pytest.approx(
        hilbert_distance(disk, a, b), rel=1e-9
    )


def test_geodesic_midpoint(disk: Ellipsoid) -> None:
    """Half way from the center to `0.8` is `0.5`."""
    total = hilbert_distance(disk, (0.0, 0.0), (0.8, 0.0))
    assert total == pytest.approx(math.log(3.0))
    assert geodesic_point(disk, (0.0, 0.0), (0.8, 0.0), total / 2) == pytest.approx((0.5, 0.0))


@pytest.mark.parametrize("fraction", [0.1, 0.25, 0.5, 0.9])
def test_geodesic_is_additive(octagon: PolytopeV, fraction: float) -> None:
    """The geodesic point splits the distance as asked."""
    a, b = (-0.3, -0.2), (0.4, 0.35)
    total = hilbert_distance(octagon, a, b)
    point = geodesic_point(octagon, a, b, fraction * total)
    assert hilbert_distance(octagon, a, point) == pytest.approx(fraction * total, rel=1e-9)
    assert hilbert_distance(octagon, point, b) == pytest.approx((1 - fraction) * total, rel=1e-9)


def test_geodesic_ends_and_range(disk: Ellipsoid) -> None:
    """Ends are returned as given, parameters past them are rejected."""
    a, b = (0.0, 0.0), (0.8, 0.0)
    total = hilbert_distance(disk, a, b)
    assert geodesic_point(disk, a, b, 0.0) == a
    assert geodesic_point(disk, a, b, total) == b
    with pytest.raises(OutOfRangeError):
        geodesic_point(disk, a, b, 2 * total)
    with pytest.raises(OutOfRangeError):
        geodesic_point(disk, a, b, -0.1)
    with pytest.raises(CoincidentPointsError):
        geodesic_point(disk, a, a, 0.0)


@pytest.mark.parametrize(("dim", "count"), [(1, 4), (2, 12), (3, 50), (4, 20)])
def test_sample_directions(dim: int, count: int) -> None:
    """`count` unit vectors of the right dimension."""
    directions = sample_directions(dim, count)
    assert len(directions) == count
    for direction in directions:
        assert len(direction) == dim
        assert math.fsum(v * v for v in direction) == pytest.approx(1.0)


def test_ball_of_disk_is_round(disk: Ellipsoid) -> None:
    """Hyperbolic circles about the center are Euclidean circles."""
    for point in ball_boundary(disk, (0.0, 0.0), math.atanh(0.5), 32):
        assert math.hypot(*point) == pytest.approx(0.5)


def test_ball_boundary_distance(octagon: PolytopeV, tetrahedron: PolytopeV) -> None:
    """Every sample is at distance `r` from the center."""
    for body, center in ((octagon, (0.1, -0.05)), (tetrahedron, (1.0, 1.0, 1.0))):
        for point in ball_boundary(body, center, 0.7, 24):
            assert hilbert_distance(body, center, point) == pytest.approx(0.7, rel=1e-9)


def test_ball_boundary_errors(disk: Ellipsoid) -> None:
    """Positive radius, enough samples, interior center."""
    with pytest.raises(OutOfRangeError):
        ball_boundary(disk, (0.0, 0.0), 0.0, 16)
    with pytest.raises(OutOfRangeError):
        ball_boundary(disk, (0.0, 0.0), 1.0, 2)
    with pytest.raises(PointsNotInteriorError):
        ball_boundary(disk, (1.0, 0.0), 1.0, 16)


def test_nested_bodies_shrink_distances(disk: Ellipsoid) -> None:
    """The inner body sees points farther apart."""
    small = PolytopeV([(-0.6, -0.6), (0.6, -0.6), (0.6, 0.6), (-0.6, 0.6)])
    result = compare_nested(small, disk, (0.1, 0.2), (-0.3, 0.1))
    assert result.d_inner > result.d_outer
    with pytest.raises(NotNestedError):
        compare_nested(disk, small, (0.1, 0.2), (-0.3, 0.1))


@given(a=points, b=points)
def test_distance_is_symmetric_and_positive(a: tuple[float, float], b: tuple[float, float]) -> None:
    """Distinct points are a positive distance apart, either way round."""
    assume(math.dist(a, b) > 1e-3)
    ab = hilbert_distance(UNIT_DISK, a, b)
    assert ab > 0
    assert ab == pytest.approx(hilbert_distance(UNIT_DISK, b, a), rel=1e-9)


@pytest.mark.parametrize(("inner", "outer"), NESTED_PAIRS)
@given(a=points, b=points)
def test_nested_comparison_is_monotone(
    inner: Polytope | Ellipsoid,
    outer: Polytope | Ellipsoid,
    a: tuple[float, float],
    b: tuple[float, float],
) -> None:
    """A smaller body never shortens a distance."""
    assume(math.dist(a, b) > 1e-3)
    result = compare_nested(inner, outer, a, b)
    assert result.d_inner >= result.d_outer - 1e-12


def test_triangle_certificate_exact(triangle: PolytopeV) -> None:
    """A strict triangle: sound, exact and with a positive gap."""
    a, c, b = (F(1), F(1)), (F(2), F(1)), (F(1), F(2))
    certificate = triangle_construction(triangle, a, c, b)
    assert certificate.is_exact
    assert certificate.residuals() == (0, 0, 0)
    assert certificate.is_sound()
    assert certificate.cr_prod > certificate.cr_ab
    assert certificate.verdict() == "inequality strict"
    assert certificate.cr_ac == chord_cross_ratio(chord(triangle, a, c))
    expected = (
        hilbert_distance(triangle, a, c)
        + hilbert_distance(triangle, c, b)
        - hilbert_distance(triangle, a, b)
    )
    assert certificate.gap() == pytest.approx(expected)


def test_triangle_certificate_chords(triangle: PolytopeV) -> None:
    """Chord ends carry over into the certificate."""
    certificate = triangle_construction(triangle, (F(1), F(1)), (F(2), F(1)), (F(1), F(2)))
    assert (certificate.u, certificate.v) == ((0, 1), (3, 1))
    assert {certificate.z, certificate.t} == {(3, 0), (0, 3)}
    assert (certificate.x, certificate.y) == ((1, 0), (1, 3))


def test_triangle_certificate_in_disk(disk: Ellipsoid) -> None:
    """Strictly convex bodies never attain equality."""
    rng = np.random.default_rng(3)
    for _ in range(20):
        a, c, b = (random_interior(rng, 0.9) for _ in range(3))
        certificate = triangle_construction(disk, a, c, b)
        assert certificate.is_sound()
        assert certificate.gap() > 0
        assert not certificate.is_equality()


def test_triangle_certificate_in_space(tetrahedron: PolytopeV) -> None:
    """The construction runs in the plane of the triangle."""
    a, c, b = (F(1), F(1), F(1)), (F(2), F(1), F(1, 2)), (F(1, 2), F(1), F(2))
    certificate = triangle_construction(tetrahedron, a, c, b)
    assert certificate.is_exact
    assert certificate.is_sound()


def test_triangle_construction_errors(triangle: PolytopeV) -> None:
    """Triangles are non-degenerate and interior."""
    with pytest.raises(CollinearTripleError):
        triangle_construction(triangle, (F(1), F(1)), (F(2), F(1)), (F(3, 2), F(1)))
    with pytest.raises(PointsNotInteriorError):
        triangle_construction(triangle, (F(1), F(1)), (F(2), F(1)), (F(1), F(3)))


def test_collinear_triple_on_a_segment() -> None:
    """On a line every triangle is degenerate."""
    segment = PolytopeV([(F(0),), (F(4),)])
    with pytest.raises(CollinearTripleError):
        triangle_construction(segment, (F(1),), (F(2),), (F(3),))


@pytest.mark.parametrize("body_name", ["triangle", "square", "tetrahedron"])
def test_equality_triples(body_name: str, request: pytest.FixtureRequest) -> None:
    """Every pair of flats of a rational polytope yields an equality triangle."""
    body = request.getfixturevalue(body_name)
    for flats in degenerate_flats(body):
        a, c, b = find_equality_triple(body, flats)
        certificate = triangle_construction(body, a, c, b)
        assert certificate.is_exact
        assert certificate.cr_prod == certificate.cr_ab
        assert certificate.verdict() == "equality"
        assert certificate.w.is_ideal is flats.parallel


def test_equality_triple_in_floats(float_triangle: PolytopeV) -> None:
    """Float polygons reach equality within tolerance."""
    flats = degenerate_flats(float_triangle)[0]
    a, c, b = find_equality_triple(float_triangle, flats)
    certificate = triangle_construction(float_triangle, a, c, b)
    assert certificate.is_equality()
    assert abs(certificate.gap()) <= 1e-9
