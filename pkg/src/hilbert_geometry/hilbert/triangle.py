"""The triangle inequality of the Hilbert metric, as a checkable construction.

For a triangle `A, C, B` the chords are labelled `U, A, C, V`, `Z, C, B, T`
and `X, A, B, Y` in their order along the line. Lines `UZ` and `VT` meet
in `W`, which projects line `AC` and line `CB` onto line `AB`:

    [U, V, C, A] = [X', Y', D, A]    and    [Z, T, B, C] = [X', Y', B, D]

with `X' = UZ.AB`, `Y' = VT.AB` and `D = WC.AB`. The product of the two is
`[X', Y', B, A]`, which is at least `[X, Y, B, A]` because `X'` and `Y'`
lie outside the chord `XY`. Equality needs `X' = X` and `Y' = Y`, so two
boundary segments in one plane section.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import TYPE_CHECKING

import structlog

from hilbert_geometry import settings
from hilbert_geometry.convex import PointClass, chord, classify
from hilbert_geometry.exceptions import (
    CollinearTripleError,
    DegenerateConstructionError,
    DegenerateInputError,
    GeometryError,
    InfeasibleFlatsError,
    NumericalInstabilityError,
)
from hilbert_geometry.linalg import add, is_exact, scale, sub
from hilbert_geometry.projective import ProjectivePoint, collinear, cross_ratio_of, join, meet

from .metric import HilbertConfig, chord_cross_ratio, hilbert_distance_from_chord

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from hilbert_geometry.convex import ConvexBody, FlatPair, Polytope
    from hilbert_geometry.linalg import Scalar, Vector

__all__ = (
    "TriangleCertificate",
    "find_equality_triple",
    "triangle_construction",
)

LOGGER = structlog.get_logger()

_PARAMETER_TRIPLES = (
    (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)),
    (Fraction(1, 4), Fraction(1, 3), Fraction(3, 4)),
    (Fraction(1, 5), Fraction(2, 5), Fraction(4, 5)),
    (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)),
)


def _ratio(numerator: Scalar, denominator: Scalar) -> float:
    return float(numerator) / float(denominator)  # type: ignore[arg-type]


@dataclass(frozen=True)
class TriangleCertificate:
    """Every point and cross ratio of the construction.

    Points of the chords are affine; `W`, `X'`, `Y'` and `D` are homogeneous
    since `W` is ideal whenever the two flats of an equality case are
    parallel, and `X'` or `Y'` are ideal when a side line is parallel to
    `AB`.
    """

    a: Vector
    c: Vector
    b: Vector
    u: Vector
    v: Vector
    z: Vector
    t: Vector
    x: Vector
    y: Vector
    w: ProjectivePoint
    xp: ProjectivePoint
    yp: ProjectivePoint
    d: ProjectivePoint
    cr_ac: Scalar
    """`[U, V, C, A]`."""
    cr_cb: Scalar
    """`[Z, T, B, C]`."""
    cr_prod: Scalar
    """`cr_ac * cr_cb`."""
    cr_ab: Scalar
    """`[X, Y, B, A]`."""

    @property
    def is_exact(self) -> bool:
        """True when the construction ran in rational arithmetic."""
        return is_exact([self.cr_ac, self.cr_cb, self.cr_prod, self.cr_ab])

    def residuals(self) -> tuple[Scalar, Scalar, Scalar]:
        """Errors of the two perspectivities and of the product identity.

        Zero in rational arithmetic.
        """
        a, b = ProjectivePoint.from_affine(self.a), ProjectivePoint.from_affine(self.b)
        return (
            abs(cross_ratio_of(self.xp, self.yp, self.d, a).finite() - self.cr_ac),
            abs(cross_ratio_of(self.xp, self.yp, b, self.d).finite() - self.cr_cb),
            abs(cross_ratio_of(self.xp, self.yp, b, a).finite() - self.cr_prod),
        )

    def gap(self, cfg: HilbertConfig | None = None) -> float:
        """`d(A, C) + d(C, B) - d(A, B)`."""
        cfg = cfg if cfg is not None else HilbertConfig()
        return cfg.scale * math.log(_ratio(self.cr_prod, self.cr_ab))

    def is_equality(self, cfg: HilbertConfig | None = None) -> bool:
        """Whether the triangle inequality is attained."""
        if self.is_exact:
            return self.cr_prod == self.cr_ab
        return abs(self.gap(cfg)) <= settings.geometry.EQUALITY_TOL

    def is_sound(self, tol: float | None = None) -> bool:
        """All identities hold and `cr_prod >= cr_ab`."""
        if self.is_exact:
            return all(r == 0 for r in self.residuals()) and self.cr_prod >= self.cr_ab
        tol = settings.geometry.EQUALITY_TOL if tol is None else tol
        values = (self.cr_ac, self.cr_cb, self.cr_prod)
        identities = all(
            r <= tol * max(1.0, abs(v)) for r, v in zip(self.residuals(), values)  # type: ignore
        )
        return identities and self.cr_prod >= self.cr_ab * (1 - tol)  # type: ignore[operator]

    def verdict(self, cfg: HilbertConfig | None = None) -> str:
        """`"equality"` or `"inequality strict"`."""
        return "equality" if self.is_equality(cfg) else "inequality strict"


def _lifter(a: Vector, c: Vector, b: Vector) -> Callable[[ProjectivePoint], ProjectivePoint]:
    """Map homogeneous coordinates on the frame `A, C, B` to ambient ones.

    `(w0, w1, w2)` is the point `w0 * A + w1 * (C - A) + w2 * (B - A)`.
    """
    u, v = sub(c, a), sub(b, a)

    def lift(point: ProjectivePoint) -> ProjectivePoint:
        w0, w1, w2 = point.coords
        return ProjectivePoint((w0, *add(scale(w0, a), add(scale(w1, u), scale(w2, v)))))

    return lift


def triangle_construction(
    body: ConvexBody,
    a: Sequence[Scalar],
    c: Sequence[Scalar],
    b: Sequence[Scalar],
    cfg: HilbertConfig | None = None,
) -> TriangleCertificate:
    """Run the perspective argument for the triangle `A, C, B`.

    The construction takes place in the plane of the triangle, with `A`,
    `C`, `B` at `[1:0:0]`, `[1:1:0]`, `[1:0:1]`, so rational input stays
    rational throughout.

    Raises:
        CollinearTripleError: if the three points are on one line.
        PointsNotInteriorError: unless all three are interior.
        DegenerateConstructionError: if a join or meet degenerates in floats.
        NumericallyUnstableError: for points hugging the boundary.
    """
    a, c, b = tuple(a), tuple(c), tuple(b)
    for point in (a, c, b):
        body.check_dim(point)
    corners = [ProjectivePoint.from_affine(p) for p in (a, c, b)]
    if body.dim < 2 or collinear(*corners):
        raise CollinearTripleError("A, C and B are collinear, the inequality is an equality")

    chord_ac, chord_cb, chord_ab = chord(body, a, c), chord(body, c, b), chord(body, a, b)
    for ch in (chord_ac, chord_cb, chord_ab):
        hilbert_distance_from_chord(ch, cfg)

    exact = body.is_exact and is_exact([*a, *c, *b])
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    pa, pc, pb = (
        ProjectivePoint((one, zero, zero)),
        ProjectivePoint((one, one, zero)),
        ProjectivePoint((one, zero, one)),
    )
    pu = ProjectivePoint((one, chord_ac.t_x, zero))
    pv = ProjectivePoint((one, chord_ac.t_y, zero))
    pz = ProjectivePoint((one, one - chord_cb.t_x, chord_cb.t_x))
    pt = ProjectivePoint((one, one - chord_cb.t_y, chord_cb.t_y))
    try:
        side_u, side_v, base = join(pu, pz), join(pv, pt), join(pa, pb)
        pw = meet(side_u, side_v)
        pxp, pyp = meet(side_u, base), meet(side_v, base)
        pd = meet(join(pw, pc), base)
    except DegenerateInputError as exc:
        raise DegenerateConstructionError(
            f"{exc}; perturb the triangle slightly and try again"
        ) from exc

    cr_ac = cross_ratio_of(pu, pv, pc, pa).finite()
    cr_cb = cross_ratio_of(pz, pt, pb, pc).finite()
    lift = _lifter(a, c, b)
    certificate = TriangleCertificate(
        a=a,
        c=c,
        b=b,
        u=chord_ac.x,
        v=chord_ac.y,
        z=chord_cb.x,
        t=chord_cb.y,
        x=chord_ab.x,
        y=chord_ab.y,
        w=lift(pw),
        xp=lift(pxp),
        yp=lift(pyp),
        d=lift(pd),
        cr_ac=cr_ac,
        cr_cb=cr_cb,
        cr_prod=cr_ac * cr_cb,
        cr_ab=chord_cross_ratio(chord_ab),
    )
    LOGGER.debug(
        settings.log.COMPUTATION_EVENT,
        operation="triangle_construction",
        cr_prod=certificate.cr_prod,
        cr_ab=certificate.cr_ab,
        w_ideal=certificate.w.is_ideal,
    )
    return certificate


def find_equality_triple(body: Polytope, flats: FlatPair) -> tuple[Vector, Vector, Vector]:
    """A non-degenerate triangle whose inequality is an equality.

    Three chords run from the first flat to the second with increasing
    parameters on both; since the flats are oriented alike, every two of
    them cross. Calling the crossings `A = c1.c2`, `C = c1.c3` and
    `B = c2.c3` puts `U`, `Z`, `X` on one flat and `V`, `T`, `Y` on the
    other, which is exactly the equality case. A few parameter triples are
    tried, each verified by `triangle_construction()`.

    Raises:
        InfeasibleFlatsError: if no candidate gives an equality triangle.
    """
    exact = body.is_exact
    section = flats.section
    one = Fraction(1) if exact else 1.0

    def plane_point(point: Vector) -> ProjectivePoint:
        s, t = section.coordinates(point)
        return ProjectivePoint((one, s, t))

    def ambient(point: ProjectivePoint) -> Vector:
        return section.lift(*point.affine())

    for alphas, betas in product(_PARAMETER_TRIPLES, repeat=2):
        if not exact:
            alphas, betas = tuple(map(float, alphas)), tuple(map(float, betas))
        chords = [
            join(plane_point(flats.first.at(alpha)), plane_point(flats.second.at(beta)))
            for alpha, beta in zip(alphas, betas)
        ]
        try:
            corners = tuple(meet(chords[i], chords[j]) for i, j in ((0, 1), (0, 2), (1, 2)))
        except DegenerateInputError:
            continue
        if any(p.is_ideal for p in corners) or collinear(*corners):
            continue
        a, c, b = (ambient(p) for p in corners)
        if any(classify(body, p) is not PointClass.INTERIOR for p in (a, c, b)):
            continue
        try:
            certificate = triangle_construction(body, a, c, b)
        except (GeometryError, NumericalInstabilityError):
            continue
        if certificate.is_equality():
            LOGGER.debug(
                settings.log.COMPUTATION_EVENT,
                operation="find_equality_triple",
                alphas=[str(v) for v in alphas],
                betas=[str(v) for v in betas],
            )
            return a, c, b
    raise InfeasibleFlatsError("no equality triangle found for this pair of flats")
