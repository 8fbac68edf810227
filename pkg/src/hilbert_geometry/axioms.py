"""Order and incidence predicates, and a harness checking the order axioms.

Betweenness is strict: `C` is between `A` and `B` when it lies on the open
segment. With rational coordinates every predicate is decided exactly,
which is what makes a sampled check of the axioms a certificate rather
than an estimate.
"""
from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING

import msgspec
import numpy as np
import structlog

from hilbert_geometry import settings, utils
from hilbert_geometry.convex import Halfspace, PointClass, Polytope, classify
from hilbert_geometry.exceptions import DimensionMismatchError, PointOnHyperplaneError
from hilbert_geometry.linalg import add, is_exact, is_zero, max_abs, scale, sub
from hilbert_geometry.projective import ProjectivePoint
from hilbert_geometry.projective import collinear as projective_collinear

if TYPE_CHECKING:
    from collections.abc import Sequence

    from hilbert_geometry.convex import ConvexBody
    from hilbert_geometry.linalg import Scalar, Vector

__all__ = (
    "CONTINUITY_NOTE",
    "AxiomCheck",
    "OrderAxiomReport",
    "ShardConfig",
    "between",
    "check_order_axioms",
    "closed_between",
    "collinear",
    "random_collinear_samples",
    "same_side",
    "segment_crossing",
)

LOGGER = structlog.get_logger()

CONTINUITY_NOTE = (
    "Continuity (every bounded monotone sequence has a unique greatest lower bound) quantifies "
    "over infinite sequences and is not checked on finite samples."
)


def _magnitude(*points: Sequence[Scalar]) -> float:
    return max(1.0, *(max_abs(p) for p in points))


def _same_point(p: Sequence[Scalar], q: Sequence[Scalar]) -> bool:
    magnitude = _magnitude(p, q)
    return all(is_zero(x - y, magnitude) for x, y in zip(p, q))


def collinear(*points: Sequence[Scalar]) -> bool:
    """Whether affine points lie on one line, exactly for rationals."""
    if len({len(p) for p in points}) > 1:
        raise DimensionMismatchError("points of different dimensions")
    return projective_collinear(*(ProjectivePoint.from_affine(p) for p in points))


def _segment_parameter(a: Sequence[Scalar], c: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    """`s` with `c = a + s (b - a)`, for collinear points and `a != b`."""
    direction = sub(b, a)
    k = max(range(len(direction)), key=lambda i: abs(direction[i]))
    offset = c[k] - a[k]
    if is_exact([offset, direction[k]]):
        return Fraction(offset) / Fraction(direction[k])  # type: ignore[arg-type]
    return offset / direction[k]


def between(a: Sequence[Scalar], c: Sequence[Scalar], b: Sequence[Scalar]) -> bool:
    """`c` lies on the open segment `(a, b)`.

    False for non-collinear input and whenever two of the points coincide.
    """
    a, c, b = tuple(a), tuple(c), tuple(b)
    if _same_point(a, b) or _same_point(a, c) or _same_point(c, b):
        return False
    if not collinear(a, c, b):
        return False
    s = _segment_parameter(a, c, b)
    return 0 < s < 1  # type: ignore[operator]


def closed_between(a: Sequence[Scalar], c: Sequence[Scalar], b: Sequence[Scalar]) -> bool:
    """`c` lies on the closed segment `[a, b]`."""
    a, c, b = tuple(a), tuple(c), tuple(b)
    if _same_point(a, c) or _same_point(c, b):
        return True
    if _same_point(a, b) or not collinear(a, c, b):
        return False
    s = _segment_parameter(a, c, b)
    return 0 <= s <= 1  # type: ignore[operator]


def _side(hyperplane: Halfspace, point: Sequence[Scalar]) -> Scalar:
    if len(point) != hyperplane.dim:
        raise DimensionMismatchError("point and hyperplane have different dimensions")
    value = hyperplane.slack(tuple(point))
    magnitude = max_abs(hyperplane.normal) * _magnitude(point) + abs(float(hyperplane.offset))
    if is_zero(value, magnitude):
        raise PointOnHyperplaneError(f"{utils.format_point(point)} is on the hyperplane")
    return value


def same_side(hyperplane: Halfspace, a: Sequence[Scalar], b: Sequence[Scalar]) -> bool:
    """Whether `a` and `b` lie in the same open half-space of `normal . x = offset`.

    Raises:
        PointOnHyperplaneError: if either point is on the hyperplane.
    """
    return (_side(hyperplane, a) > 0) == (_side(hyperplane, b) > 0)  # type: ignore[operator]


def segment_crossing(
    hyperplane: Halfspace, a: Sequence[Scalar], b: Sequence[Scalar]
) -> Vector | None:
    """Where the open segment `(a, b)` meets the hyperplane, if it does."""
    side_a, side_b = hyperplane.slack(tuple(a)), hyperplane.slack(tuple(b))
    if side_a * side_b >= 0:  # type: ignore[operator]
        return None
    if is_exact([side_a, side_b]):
        weight: Scalar = Fraction(side_a) / (Fraction(side_a) - Fraction(side_b))  # type: ignore
    else:
        weight = side_a / (side_a - side_b)
    return add(tuple(a), scale(weight, sub(tuple(b), tuple(a))))


class AxiomCheck(msgspec.Struct):
    """Tally of one axiom over a sample."""

    name: str
    description: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: list[str] = msgspec.field(default_factory=list)

    def record(self, ok: bool, witness: Sequence[Sequence[Scalar]]) -> None:
        """Count one instance, keeping a few failing ones."""
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.counterexamples) < settings.axioms.MAX_COUNTEREXAMPLES:
            self.counterexamples.append(" ".join(utils.format_point(p) for p in witness))

    def merge(self, other: AxiomCheck) -> AxiomCheck:
        """Combined tally, counterexamples of `self` first."""
        examples = [*self.counterexamples, *other.counterexamples]
        return AxiomCheck(
            name=self.name,
            description=self.description,
            passed=self.passed + other.passed,
            failed=self.failed + other.failed,
            skipped=self.skipped + other.skipped,
            counterexamples=examples[: settings.axioms.MAX_COUNTEREXAMPLES],
        )


class OrderAxiomReport(msgspec.Struct):
    """Outcome of `check_order_axioms()`."""

    seed: int
    samples: int
    checks: list[AxiomCheck]
    continuity_note: str = CONTINUITY_NOTE

    @property
    def ok(self) -> bool:
        """No check failed."""
        return all(check.failed == 0 for check in self.checks)


_DESCRIPTIONS = {
    "II.1": "between two distinct points there is a third point of their line",
    "II.2": "of three distinct collinear points exactly one is between the other two",
    "II.3": "a segment extends beyond its end inside the body",
    "II.4": "four collinear points can be labelled so that every ordered triple is between",
    "II.5": "two points are on one side of a hyperplane iff no point of it is between them",
}


@dataclasses.dataclass()
class ShardConfig:
    """How the axiom check spreads its samples over worker threads."""

    workers: int = dataclasses.field(default_factory=lambda: settings.axioms.WORKERS)
    """Thread pool size."""
    shard_size: int = dataclasses.field(default_factory=lambda: settings.axioms.SHARD_SIZE)
    """Configurations per shard.

    Each shard draws its random hyperplanes from a generator seeded with
    `(seed, shard index)`, so the report doesn't depend on `workers`.
    """


def _midpoint(p: Vector, q: Vector) -> Vector:
    half = Fraction(1, 2) if is_exact([*p, *q]) else 0.5
    return scale(half, add(p, q))


def _distinct(points: Sequence[Vector]) -> list[Vector]:
    unique: list[Vector] = []
    for point in points:
        if not any(_same_point(point, other) for other in unique):
            unique.append(point)
    return unique


def _check_density(check: AxiomCheck, points: list[Vector]) -> None:
    for p, q in combinations(points, 2):
        check.record(between(p, _midpoint(p, q), q), (p, q))


def _check_trichotomy(check: AxiomCheck, points: list[Vector]) -> None:
    for p, q, r in combinations(points, 3):
        holds = [between(q, p, r), between(p, q, r), between(p, r, q)]
        check.record(sum(holds) == 1, (p, q, r))


def _check_extension(check: AxiomCheck, points: list[Vector], body: ConvexBody | None) -> None:
    p, q = points[0], points[1]
    if body is None:
        witness = add(p, scale(2, sub(q, p)))
        check.record(between(p, q, witness), (p, q, witness))
        return
    _, t_max = body.line_parameters(p, sub(q, p))
    if not t_max > 1:  # type: ignore[operator]
        check.record(False, (p, q))
        return
    half = Fraction(1, 2) if is_exact([t_max]) else 0.5
    witness = add(p, scale((1 + t_max) * half, sub(q, p)))
    inside = classify(body, witness) is PointClass.INTERIOR
    check.record(inside and between(p, q, witness), (p, q, witness))


def _check_four_points(check: AxiomCheck, points: list[Vector]) -> None:
    if len(points) < 4:
        check.skipped += 1
        return
    quad = points[:4]
    ordered = sorted(quad, key=lambda p: _segment_parameter(quad[0], p, quad[1]))
    ok = all(between(ordered[h], ordered[i], ordered[k]) for h, i, k in combinations(range(4), 3))
    check.record(ok, ordered)


def _random_hyperplane(rng: np.random.Generator, points: list[Vector]) -> Halfspace:
    p, q = points[0], points[1]
    exact = is_exact([*p, *q])
    denominator = 16
    r = Fraction(int(rng.integers(-denominator, 2 * denominator + 1)), denominator)
    anchor = add(p, scale(r if exact else float(r), sub(q, p)))
    normal: tuple[int, ...] = (0,)
    while all(n == 0 for n in normal):
        normal = tuple(int(n) for n in rng.integers(-5, 6, size=len(p)))
    offset = sum(n * a for n, a in zip(normal, anchor))
    return Halfspace(normal, offset)


def _check_separation(
    check: AxiomCheck, points: list[Vector], rng: np.random.Generator
) -> None:
    hyperplane = _random_hyperplane(rng, points)
    for p, q in combinations(points, 2):
        try:
            agree = same_side(hyperplane, p, q)
        except PointOnHyperplaneError:
            check.skipped += 1
            continue
        crossing = segment_crossing(hyperplane, p, q)
        crosses = crossing is not None and between(p, crossing, q)
        check.record(agree != crosses, (p, q))


def _check_shard(
    configurations: Sequence[Sequence[Vector]],
    body: ConvexBody | None,
    seed: int,
    index: int,
) -> list[AxiomCheck]:
    rng = np.random.default_rng([seed, index])
    checks = {name: AxiomCheck(name, description) for name, description in _DESCRIPTIONS.items()}
    for configuration in configurations:
        points = _distinct([tuple(p) for p in configuration])
        if len(points) < 3 or not collinear(*points):
            for check in checks.values():
                check.skipped += 1
            continue
        _check_density(checks["II.1"], points)
        _check_trichotomy(checks["II.2"], points)
        _check_extension(checks["II.3"], points, body)
        _check_four_points(checks["II.4"], points)
        _check_separation(checks["II.5"], points, rng)
    return list(checks.values())


def check_order_axioms(
    sample: Sequence[Sequence[Sequence[Scalar]]],
    seed: int = 0,
    body: ConvexBody | None = None,
    shards: ShardConfig | None = None,
) -> OrderAxiomReport:
    """Check axiom group II on configurations of collinear points.

    Every configuration is tested for density, trichotomy, extension,
    ordering of four points and plane separation. The extension witness
    lies halfway from the second point to the boundary when `body` is
    given, so the check fails exactly when the segment can't be extended
    inside the body.

    Args:
        sample: configurations of three or more collinear points; others are
            counted as skipped.
        seed: seed for the random separating hyperplanes.
        body: region the configurations live in, if any.
        shards: thread pool layout.

    Returns:
        The tallies in the order II.1 to II.5, merged over shards in shard
        order.
    """
    shards = shards if shards is not None else ShardConfig()
    size = max(1, shards.shard_size)
    chunks = [sample[i : i + size] for i in range(0, len(sample), size)]
    LOGGER.debug(
        settings.log.COMPUTATION_EVENT,
        operation="check_order_axioms",
        chunks=len(chunks),
        **utils.dataclass_as_dict_shallow(shards),
    )
    with ThreadPoolExecutor(max_workers=max(1, shards.workers)) as executor:
        results = list(
            executor.map(
                _check_shard,
                chunks,
                [body] * len(chunks),
                [seed] * len(chunks),
                range(len(chunks)),
            )
        )
    merged = [AxiomCheck(name, description) for name, description in _DESCRIPTIONS.items()]
    for shard in results:
        merged = [total.merge(part) for total, part in zip(merged, shard)]
    return OrderAxiomReport(seed=seed, samples=len(sample), checks=merged)


def random_collinear_samples(
    body: ConvexBody, count: int, size: int = 4, seed: int = 0
) -> list[tuple[Vector, ...]]:
    """Configurations of `size` collinear interior points.

    For a rational polytope the line passes through a random positive
    rational combination of the vertices in a random integer direction, and
    the points sit at random dyadic parameters of its chord, so everything
    is exact. Other bodies use their interior point as the base.
    """
    rng = np.random.default_rng(seed)
    denominator = 64
    configurations = []
    for _ in range(count):
        if isinstance(body, Polytope) and body.is_exact:
            weights = [Fraction(int(w)) for w in rng.integers(1, 10, size=len(body.vertices))]
            total = sum(weights)
            base: Vector = tuple(Fraction(0) for _ in range(body.dim))
            for weight, vertex in zip(weights, body.vertices):
                base = add(base, scale(weight / total, vertex))
        else:
            base = tuple(body.interior_point())
        direction: tuple[int, ...] = (0,)
        while all(d == 0 for d in direction):
            direction = tuple(int(d) for d in rng.integers(-5, 6, size=body.dim))
        t_min, t_max = body.line_parameters(base, direction)
        steps = rng.integers(1, denominator, size=size)
        points = []
        for step in steps:
            weight = Fraction(int(step), denominator)
            if not is_exact([t_min, t_max]):
                weight = float(weight)  # type: ignore[assignment]
            points.append(add(base, scale(t_min + (t_max - t_min) * weight, direction)))
        configurations.append(tuple(points))
    return configurations
