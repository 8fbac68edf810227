"""Config that can be shared between all test types."""
from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np
import pytest

from hilbert_geometry.convex import Ellipsoid, Halfspace, PolytopeH, PolytopeV

if TYPE_CHECKING:
    from hilbert_geometry.convex import ConvexBody, Polytope

F = Fraction


@pytest.fixture(name="disk")
def fx_disk() -> Ellipsoid:
    """The unit disk, Klein model of the hyperbolic plane."""
    return Ellipsoid((0.0, 0.0), ((1.0, 0.0), (0.0, 1.0)))


@pytest.fixture(name="ball3")
def fx_ball3() -> Ellipsoid:
    """The unit ball of space."""
    return Ellipsoid.ball((0.0, 0.0, 0.0), 1.0)


@pytest.fixture(name="square")
def fx_square() -> PolytopeH:
    """`[-1, 1]^2` by half-spaces, exact."""
    return PolytopeH(
        [
            Halfspace((F(1), F(0)), F(1)),
            Halfspace((F(-1), F(0)), F(1)),
            Halfspace((F(0), F(1)), F(1)),
            Halfspace((F(0), F(-1)), F(1)),
        ]
    )


@pytest.fixture(name="triangle")
def fx_triangle() -> PolytopeV:
    """Exact triangle `(0, 0), (4, 0), (0, 4)`."""
    return PolytopeV([(F(0), F(0)), (F(4), F(0)), (F(0), F(4))])


@pytest.fixture(name="float_triangle")
def fx_float_triangle() -> PolytopeV:
    """The same triangle in floats."""
    return PolytopeV([(0.0, 0.0), (4.0, 0.0), (0.0, 4.0)])


@pytest.fixture(name="octagon")
def fx_octagon() -> PolytopeV:
    """Random convex 8-gon: perturbed angles on a circle."""
    rng = np.random.default_rng(8)
    angles = np.sort(2 * np.pi * (np.arange(8) + rng.uniform(0.1, 0.9, size=8)) / 8)
    return PolytopeV([(float(np.cos(a)), float(np.sin(a))) for a in angles])


@pytest.fixture(name="tetrahedron")
def fx_tetrahedron() -> PolytopeV:
    """Exact corner tetrahedron, scaled by 4."""
    return PolytopeV(
        [(F(0), F(0), F(0)), (F(4), F(0), F(0)), (F(0), F(4), F(0)), (F(0), F(0), F(4))]
    )


@pytest.fixture(name="float_bodies")
def fx_float_bodies(
    disk: Ellipsoid, float_triangle: PolytopeV, octagon: PolytopeV
) -> list[ConvexBody]:
    """Planar bodies queried in float arithmetic."""
    square = PolytopeV([(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)])
    return [disk, float_triangle, square, octagon]


@pytest.fixture(name="exact_polytopes")
def fx_exact_polytopes(
    square: PolytopeH, triangle: PolytopeV, tetrahedron: PolytopeV
) -> list[Polytope]:
    """Rational polytopes in the plane and in space."""
    return [square, triangle, tetrahedron]
