"""The `hilbert-geometry` command.

Results go to standard output, diagnostics and logs to standard error.
Exit codes are `0` on success, `2` for unreadable input, `3` when a
geometric precondition fails and `4` when a result would be numerically
meaningless.

Points are written as one argument, `"x y"` or `"x,y"`. A point starting
with a minus sign must follow a `--`, as in `hilbert-geometry dist disk.json
-- "-0.5 0" "0.5 0"`.
"""
from __future__ import annotations

import functools
from pathlib import Path
from typing import TYPE_CHECKING, Any, TypeVar, cast

import click
import structlog
from pydantic import ValidationError

from hilbert_geometry import log, settings
from hilbert_geometry.axioms import check_order_axioms, random_collinear_samples
from hilbert_geometry.cayley_klein import Convention, LinePair, Quadric, ck_distance, laguerre_angle
from hilbert_geometry.convex import Polytope, degenerate_flats
from hilbert_geometry.exceptions import (
    DimensionMismatchError,
    GeometryError,
    HilbertGeometryError,
    InfeasibleFlatsError,
    SpecificationError,
    UnsupportedPairError,
    exception_to_exit_code,
)
from hilbert_geometry.hilbert import (
    HilbertConfig,
    ball_boundary,
    find_equality_triple,
    geodesic_point,
    hilbert_distance,
    triangle_construction,
)
from hilbert_geometry.linalg import ArithmeticMode, coerce_scalar
from hilbert_geometry.projective import (
    ProjectivePoint,
    default_auxiliaries,
    harmonic_conjugate_analytic,
    harmonic_conjugate_synthetic,
    von_staudt_coordinate,
)

from . import svg
from .output import (
    INFINITY_TOKEN,
    coordinate_names,
    csv_table,
    encode_json,
    format_point,
    format_projective,
    format_value,
)
from .spec import load_body, load_matrix, parse_point

if TYPE_CHECKING:
    from collections.abc import Callable

    from hilbert_geometry.convex import ConvexBody

__all__ = ("cli",)

LOGGER = structlog.get_logger()

F = TypeVar("F", bound="Callable[..., Any]")

BODY_FILE = click.Path(dir_okay=False, path_type=Path)
SVG_FILE = click.Path(dir_okay=False, writable=True, path_type=Path)
MODES = click.Choice([mode.value for mode in ArithmeticMode])


def handle_errors(func: F) -> F:
    """Translate library exceptions into a diagnostic and an exit code.

    With `DEBUG` set the exception propagates with its traceback instead.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            result = func(*args, **kwargs)
        except HilbertGeometryError as exc:
            if settings.app.DEBUG:
                raise
            code = exception_to_exit_code(exc)
            LOGGER.warning(
                settings.log.CLI_EVENT, error=type(exc).__name__, message=str(exc), exit_code=code
            )
            click.echo(f"error: {exc}", err=True)
            raise click.exceptions.Exit(code) from exc
        LOGGER.info(settings.log.CLI_EVENT, exit_code=0)
        return result

    return cast("F", wrapper)


def mode_option(default: ArithmeticMode) -> Callable[[F], F]:
    """`--mode`, with a per-command default."""
    return click.option(
        "--mode",
        type=MODES,
        default=default.value,
        show_default=True,
        help="Arithmetic of the computation.",
    )


scale_option = click.option(
    "--scale",
    type=float,
    default=None,
    help=f"Multiplier of the log cross ratio [default: {settings.geometry.HILBERT_SCALE}].",
)

seed_option = click.option(
    "--seed",
    type=int,
    default=settings.cli.DEFAULT_SEED,
    show_default=True,
    help="Seed of the random samples.",
)


def _hilbert_config(scale: float | None) -> HilbertConfig:
    if scale is None:
        return HilbertConfig()
    try:
        return HilbertConfig(scale=scale)
    except ValidationError as exc:
        raise SpecificationError(f"invalid --scale: {scale}, it must be positive") from exc


@click.group()
@click.pass_context
def cli(ctx: click.Context) -> None:
    """Hilbert metrics of convex bodies and Cayley-Klein metrics of quadrics."""
    log.configure()
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(command=ctx.invoked_subcommand)


@cli.command()
@click.argument("body_file", type=BODY_FILE)
@click.argument("a")
@click.argument("b")
@scale_option
@mode_option(ArithmeticMode.FLOAT)
@handle_errors
def dist(body_file: Path, a: str, b: str, scale: float | None, mode: str) -> None:
    """Hilbert distance of interior points A and B."""
    cfg = _hilbert_config(scale)
    body = load_body(body_file, mode)
    distance = hilbert_distance(body, parse_point(a, mode), parse_point(b, mode), cfg)
    click.echo(format_value(distance))


@cli.command()
@click.argument("body_file", type=BODY_FILE)
@click.argument("a")
@click.argument("c")
@click.argument("b")
@click.option("--svg", "svg_path", type=SVG_FILE, default=None, help="Write the figure here.")
@scale_option
@mode_option(ArithmeticMode.FLOAT)
@handle_errors
def triangle(
    body_file: Path, a: str, c: str, b: str, svg_path: Path | None, scale: float | None, mode: str
) -> None:
    """Certificate of the triangle inequality for A, C, B.

    Prints the cross ratios of the perspective construction, the excess
    d(A,C) + d(C,B) - d(A,B) and the verdict.
    """
    cfg = _hilbert_config(scale)
    body = load_body(body_file, mode)
    cert = triangle_construction(
        body, parse_point(a, mode), parse_point(c, mode), parse_point(b, mode), cfg
    )
    rows: list[tuple[str, Any]] = [
        ("cr_AC", cert.cr_ac),
        ("cr_CB", cert.cr_cb),
        ("cr_prod", cert.cr_prod),
        ("cr_AB", cert.cr_ab),
        ("gap", cert.gap(cfg)),
        ("W", format_projective(cert.w)),
        ("X'", format_projective(cert.xp)),
        ("Y'", format_projective(cert.yp)),
        ("D", format_projective(cert.d)),
        ("verdict", cert.verdict(cfg)),
    ]
    if svg_path is not None:
        svg.save(svg.triangle_figure(body, cert), svg_path)
    click.echo(csv_table(("name", "value"), rows), nl=False)


@cli.command()
@click.argument("body_file", type=BODY_FILE)
@click.argument("center")
@click.argument("radius", type=float)
@click.option("--samples", type=int, default=64, show_default=True, help="Boundary points.")
@click.option("--svg", "svg_path", type=SVG_FILE, default=None, help="Write the figure here.")
@scale_option
@handle_errors
def ball(
    body_file: Path,
    center: str,
    radius: float,
    samples: int,
    svg_path: Path | None,
    scale: float | None,
) -> None:
    """Points of the metric sphere about CENTER.

    The last column is the distance of each point from the center,
    computed afresh from its own chord.
    """
    cfg = _hilbert_config(scale)
    body = load_body(body_file)
    origin = parse_point(center)
    points = ball_boundary(body, origin, radius, samples, cfg)
    if svg_path is not None:
        svg.save(svg.ball_figure(body, origin, points), svg_path)
    rows = [(*point, hilbert_distance(body, origin, point, cfg)) for point in points]
    click.echo(csv_table((*coordinate_names(body.dim), "distance"), rows), nl=False)


@cli.command()
@click.argument("body_file", type=BODY_FILE)
@click.argument("a")
@click.argument("b")
@click.option("--steps", type=click.IntRange(min=1), default=10, show_default=True)
@scale_option
@handle_errors
def geodesic(body_file: Path, a: str, b: str, steps: int, scale: float | None) -> None:
    """Equally spaced points of the segment from A to B."""
    cfg = _hilbert_config(scale)
    body = load_body(body_file)
    start, end = parse_point(a), parse_point(b)
    total = hilbert_distance(body, start, end, cfg)
    rows = []
    for k in range(steps + 1):
        s = total * k / steps
        point = geodesic_point(body, start, end, s, cfg)
        rows.append((s, *point, hilbert_distance(body, start, point, cfg)))
    header = ("s", *coordinate_names(body.dim), "distance")
    click.echo(csv_table(header, rows), nl=False)


@cli.command()
@click.argument("l")
@click.argument("m")
@handle_errors
def angle(l: str, m: str) -> None:  # noqa: E741
    """Angle between lines of directions L and M, by Laguerre's formula."""
    first, second = parse_point(l), parse_point(m)
    if len(first) != 2 or len(second) != 2:
        raise SpecificationError("line directions need two coordinates")
    click.echo(format_value(laguerre_angle(LinePair(first, second))))  # type: ignore[arg-type]


@cli.command()
@click.argument("convention", type=click.Choice([c.value for c in Convention]))
@click.argument("a")
@click.argument("b")
@click.option(
    "--quadric",
    "quadric_file",
    type=BODY_FILE,
    default=None,
    help="JSON matrix of the absolute [default: the sphere or the standard cone].",
)
@click.option("--homogeneous", is_flag=True, help="A and B are homogeneous coordinates.")
@scale_option
@handle_errors
def ck(
    convention: str,
    a: str,
    b: str,
    quadric_file: Path | None,
    homogeneous: bool,
    scale: float | None,
) -> None:
    """Cayley-Klein distance of A and B."""
    cfg = _hilbert_config(scale)
    make = ProjectivePoint if homogeneous else ProjectivePoint.from_affine
    p, q = make(parse_point(a)), make(parse_point(b))
    if quadric_file is not None:
        quadric = Quadric(load_matrix(quadric_file))
    elif Convention(convention) is Convention.ELLIPTIC:
        quadric = Quadric.sphere(p.dim)
    else:
        quadric = Quadric.standard_cone(p.dim)
    click.echo(format_value(ck_distance(quadric, p, q, convention, cfg)))


def _line_points(*texts: str, mode: str) -> tuple[list[ProjectivePoint], bool]:
    """Points of a construction, carried into the plane when given on a line.

    On a line `inf` is the point at infinity.
    """
    ideal = [text.strip().lower() == INFINITY_TOKEN for text in texts]
    finite = [parse_point(text, mode) for text, at_inf in zip(texts, ideal) if not at_inf]
    if len({len(p) for p in finite}) > 1:
        raise DimensionMismatchError("points of different dimensions")
    on_line = all(len(p) == 1 for p in finite)
    if any(ideal) and not on_line:
        raise SpecificationError(f"{INFINITY_TOKEN!r} is accepted for points on a line only")
    one, zero = coerce_scalar(1, mode), coerce_scalar(0, mode)
    remaining = iter(finite)
    points = []
    for at_inf in ideal:
        if at_inf:
            points.append(ProjectivePoint.ideal((one, zero)))
            continue
        p = next(remaining)
        points.append(ProjectivePoint.from_affine((*p, zero) if on_line else p))
    return points, on_line


def _format_line_point(point: ProjectivePoint, on_line: bool) -> str:
    if point.is_ideal:
        return INFINITY_TOKEN
    coords = point.affine()
    return format_point(coords[:1] if on_line else coords)


@cli.command()
@click.argument("a")
@click.argument("b")
@click.argument("c")
@click.option("--synthetic", is_flag=True, help="Construct with a complete quadrangle.")
@mode_option(ArithmeticMode.RATIONAL)
@handle_errors
def harmonic(a: str, b: str, c: str, synthetic: bool, mode: str) -> None:
    """Harmonic conjugate of C with respect to A and B.

    Points on a line are single numbers, or `inf` for the point at
    infinity; the conjugate of the midpoint is printed as `inf`.
    """
    (pa, pb, pc), on_line = _line_points(a, b, c, mode=mode)
    if synthetic:
        result = harmonic_conjugate_synthetic(pa, pb, pc, *default_auxiliaries(pa, pb, pc))
    else:
        result = harmonic_conjugate_analytic(pa, pb, pc)
    click.echo(_format_line_point(result, on_line))


@cli.command()
@click.argument("p0")
@click.argument("p1")
@click.argument("p_inf")
@click.argument("x")
@click.option("--depth", type=int, default=12, show_default=True, help="Harmonic bisections.")
@handle_errors
def staudt(p0: str, p1: str, p_inf: str, x: str, depth: int) -> None:
    """Dyadic coordinate of X in the scale P0 -> 0, P1 -> 1, P_INF -> inf.

    Found by harmonic constructions alone, in rational arithmetic. Give
    P_INF as `inf` for the usual affine scale.
    """
    points, _ = _line_points(p0, p1, p_inf, x, mode=ArithmeticMode.RATIONAL.value)
    result = von_staudt_coordinate(*points, depth=depth)
    rows = [(result.value, str(result.depth), str(result.out_of_range).lower())]
    click.echo(csv_table(("value", "depth", "out_of_range"), rows), nl=False)


@cli.command()
@click.argument("body_file", type=BODY_FILE)
@click.option("--samples", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--size", type=click.IntRange(min=3), default=4, show_default=True)
@seed_option
@mode_option(ArithmeticMode.RATIONAL)
@handle_errors
def axioms(body_file: Path, samples: int, size: int, seed: int, mode: str) -> None:
    """Check the order axioms on random collinear points of the body.

    Prints the report as JSON.
    """
    body = load_body(body_file, mode)
    sample = random_collinear_samples(body, samples, size=size, seed=seed)
    report = check_order_axioms(sample, seed=seed, body=body)
    click.echo(encode_json(report))


def _polytope(body: ConvexBody) -> Polytope:
    if not isinstance(body, Polytope):
        raise UnsupportedPairError("flat boundary pieces exist on polytopes only")
    return body


@cli.command()
@click.argument("body_file", type=BODY_FILE)
@mode_option(ArithmeticMode.RATIONAL)
@handle_errors
def equality(body_file: Path, mode: str) -> None:
    """A non-collinear triple A, C, B with d(A,B) = d(A,C) + d(C,B)."""
    body = _polytope(load_body(body_file, mode))
    for pair in degenerate_flats(body):
        try:
            triple = find_equality_triple(body, pair)
        except GeometryError:
            continue
        rows = [(name, *point) for name, point in zip("ACB", triple)]
        click.echo(csv_table(("name", *coordinate_names(body.dim)), rows), nl=False)
        return
    raise InfeasibleFlatsError("no pair of flats yields an equality triangle")


@cli.command()
@click.argument("body_file", type=BODY_FILE)
@mode_option(ArithmeticMode.RATIONAL)
@handle_errors
def flats(body_file: Path, mode: str) -> None:
    """Pairs of boundary segments lying in one plane section."""
    body = _polytope(load_body(body_file, mode))
    header = ("pair", "first_start", "first_end", "second_start", "second_end", "parallel")
    rows = [
        (
            str(index),
            format_point(pair.first.start),
            format_point(pair.first.end),
            format_point(pair.second.start),
            format_point(pair.second.end),
            str(pair.parallel).lower(),
        )
        for index, pair in enumerate(degenerate_flats(body))
    ]
    click.echo(csv_table(header, rows), nl=False)
