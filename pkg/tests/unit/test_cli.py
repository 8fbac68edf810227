"""Tests for the `hilbert-geometry` command line."""
from __future__ import annotations

import csv
import io
import math
from typing import TYPE_CHECKING

import msgspec
import pytest

from hilbert_geometry import settings
from hilbert_geometry.axioms import CONTINUITY_NOTE
from hilbert_geometry.cli import cli
from hilbert_geometry.testing import modify_settings, write_body

if TYPE_CHECKING:
    from pathlib import Path

    from click.testing import CliRunner
    from structlog.testing import CapturingLogger


def table(output: str) -> list[dict[str, str]]:
    """Rows of a CSV result keyed by the header."""
    return list(csv.DictReader(io.StringIO(output)))


def test_dist_disk(runner: CliRunner, disk_file: Path) -> None:
    """`artanh(1/2)` to twelve significant digits."""
    result = runner.invoke(cli, ["dist", str(disk_file), "0 0", "0.5 0"])
    assert result.exit_code == 0
    assert result.output == "0.549306144334\n"


def test_dist_scale(runner: CliRunner, disk_file: Path) -> None:
    """Scale one gives `ln 3`."""
    result = runner.invoke(cli, ["dist", str(disk_file), "0,0", "0.5,0", "--scale", "1"])
    assert result.exit_code == 0
    assert float(result.output) == pytest.approx(math.log(3.0), rel=1e-11)


def test_dist_negative_points(runner: CliRunner, disk_file: Path) -> None:
    """A `--` lets points start with a minus sign."""
    result = runner.invoke(cli, ["dist", str(disk_file), "--", "-0.5 0", "0 0"])
    assert result.exit_code == 0
    assert result.output == "0.549306144334\n"


def test_dist_rational_triangle(runner: CliRunner, triangle_file: Path) -> None:
    """The chord through `(1, 1)` and `(2, 1)` has cross ratio 4."""
    result = runner.invoke(cli, ["dist", str(triangle_file), "1 1", "2 1", "--mode", "rational"])
    assert result.exit_code == 0
    assert result.output == "0.693147180560\n"


def test_significant_digits_setting(runner: CliRunner, disk_file: Path) -> None:
    """Output precision is configurable."""
    with modify_settings((settings.cli, {"SIGNIFICANT_DIGITS": 4})):
        result = runner.invoke(cli, ["dist", str(disk_file), "0 0", "0.5 0"])
    assert result.output == "0.5493\n"


@pytest.mark.parametrize(
    ("args", "code"),
    [
        (["dist", "{disk}", "0 0", "2 0"], 3),
        (["dist", "{disk}", "0 0", "0.999999999999999 0"], 4),
        (["dist", "{disk}", "0 0", "half 0"], 2),
        (["dist", "{disk}", "0 0", "0.5 0", "--scale", "0"], 2),
        (["dist", "{missing}", "0 0", "0.5 0"], 2),
        (["dist", "{bad}", "0 0", "0.5 0"], 2),
        (["dist", "{ragged}", "0 0", "0.1 0"], 2),
        (["dist", "{disk}", "0 0 0", "0.5 0"], 3),
        (["triangle", "{disk}", "0 0", "0.1 0", "0.2 0"], 3),
        (["angle", "1 0 0", "1 1 0"], 2),
        (["ck", "hyperbolic", "0 0", "2 0"], 3),
        (["ck", "elliptic", "0 0", "0.5 0", "--quadric", "{missing}"], 2),
        (["harmonic", "0", "1", "1"], 3),
        (["staudt", "0", "0", "2", "1/2"], 3),
        (["staudt", "0", "1", "2", "1/2", "--depth", "0"], 3),
        (["harmonic", "0 0", "1 0", "inf"], 2),
        (["flats", "{disk}"], 3),
        (["equality", "{disk}"], 3),
        (["nonsense"], 2),
    ],
)
def test_exit_codes(
    args: list[str], code: int, runner: CliRunner, disk_file: Path, tmp_path: Path
) -> None:
    """Parse failures exit 2, geometric ones 3, numerical ones 4."""
    bad = write_body(tmp_path, {"type": "blob", "size": 1}, "bad.json")
    ragged = {"type": "ellipsoid", "center": [0, 0], "shape": [[1, 0], [0]]}
    paths = {
        "disk": disk_file,
        "missing": tmp_path / "missing.json",
        "bad": bad,
        "ragged": write_body(tmp_path, ragged, "ragged.json"),
    }
    result = runner.invoke(cli, [arg.format(**paths) for arg in args])
    assert result.exit_code == code


def test_error_is_reported(runner: CliRunner, disk_file: Path) -> None:
    """A diagnostic names the failure, with no traceback."""
    result = runner.invoke(cli, ["dist", str(disk_file), "0 0", "2 0"])
    assert "error:" in result.output
    assert "Traceback" not in result.output


def test_error_is_logged(
    runner: CliRunner, disk_file: Path, cap_logger: CapturingLogger
) -> None:
    """Failures are logged with the exception type and the exit code."""
    runner.invoke(cli, ["dist", str(disk_file), "0 0", "2 0"])
    assert len(cap_logger.calls) == 1
    call = cap_logger.calls[0]
    assert call.method_name == "warning"
    assert call.kwargs["event"] == settings.log.CLI_EVENT
    assert call.kwargs["error"] == "PointsNotInteriorError"
    assert call.kwargs["exit_code"] == 3
    assert call.kwargs["command"] == "dist"


def test_debug_reraises(runner: CliRunner, disk_file: Path) -> None:
    """With `DEBUG` the exception escapes to the caller."""
    with modify_settings((settings.app, {"DEBUG": True})):
        result = runner.invoke(cli, ["dist", str(disk_file), "0 0", "2 0"])
    assert result.exit_code == 1
    assert type(result.exception).__name__ == "PointsNotInteriorError"


def test_triangle_certificate(runner: CliRunner, triangle_file: Path, tmp_path: Path) -> None:
    """Exact cross ratios, a strict verdict and a figure."""
    figure = tmp_path / "triangle.svg"
    result = runner.invoke(
        cli,
        ["triangle", str(triangle_file), "1 1", "2 1", "1 2", "--mode", "rational"]
        + ["--svg", str(figure)],
    )
    assert result.exit_code == 0
    rows = {row["name"]: row["value"] for row in table(result.output)}
    assert list(rows) == [
        "cr_AC", "cr_CB", "cr_prod", "cr_AB", "gap", "W", "X'", "Y'", "D", "verdict"
    ]  # fmt: skip
    assert rows["cr_AC"] == "4"
    assert rows["verdict"] == "inequality strict"
    assert float(rows["gap"]) > 0
    assert figure.read_text().startswith("<?xml")


def test_triangle_equality_verdict(runner: CliRunner, square_file: Path, tmp_path: Path) -> None:
    """Chords ending on two opposite sides of the square attain equality."""
    figure = tmp_path / "equality.svg"
    result = runner.invoke(
        cli,
        ["triangle", str(square_file), "0 0", "1/7 1/14", "1/3 0", "--mode", "rational"]
        + ["--svg", str(figure)],
    )
    assert result.exit_code == 0
    rows = {row["name"]: row["value"] for row in table(result.output)}
    assert rows["cr_AC"] == "4/3"
    assert rows["cr_CB"] == "3/2"
    assert rows["cr_prod"] == rows["cr_AB"] == "2"
    assert rows["W"] == "inf"
    assert rows["verdict"] == "equality"
    assert ">W</text>" in figure.read_text()


@pytest.mark.parametrize(
    "args",
    [
        ["ball", "{disk}", "0.1 0.2", "0.5", "--samples", "16"],
        ["axioms", "{triangle}", "--samples", "40", "--seed", "5"],
        ["geodesic", "{disk}", "0 0", "0.5 0.1", "--steps", "6"],
    ],
)
def test_output_is_reproducible(
    args: list[str], runner: CliRunner, disk_file: Path, triangle_file: Path
) -> None:
    """Identical invocations print identical bytes."""
    argv = [arg.format(disk=disk_file, triangle=triangle_file) for arg in args]
    first, second = runner.invoke(cli, argv), runner.invoke(cli, argv)
    assert first.exit_code == second.exit_code == 0
    assert first.output == second.output


def test_ball(runner: CliRunner, disk_file: Path, tmp_path: Path) -> None:
    """Every boundary point is at the radius."""
    figure = tmp_path / "ball.svg"
    result = runner.invoke(
        cli, ["ball", str(disk_file), "0.1 0.2", "0.5", "--samples", "8", "--svg", str(figure)]
    )
    assert result.exit_code == 0
    rows = table(result.output)
    assert len(rows) == 8
    assert list(rows[0]) == ["x", "y", "distance"]
    for row in rows:
        assert float(row["distance"]) == pytest.approx(0.5, abs=1e-9)
    assert "<polygon" in figure.read_text()


def test_geodesic(runner: CliRunner, disk_file: Path) -> None:
    """The distance column matches the arc length column."""
    result = runner.invoke(cli, ["geodesic", str(disk_file), "0 0", "0.5 0", "--steps", "4"])
    assert result.exit_code == 0
    rows = table(result.output)
    assert len(rows) == 5
    assert float(rows[-1]["x"]) == pytest.approx(0.5)
    for row in rows:
        assert float(row["distance"]) == pytest.approx(float(row["s"]), abs=1e-9)


@pytest.mark.parametrize(
    ("l", "m", "expected"),
    [("1 0", "1 1", "0.785398163397"), ("1 0", "0 1", "1.57079632679")],
)
def test_angle(l: str, m: str, expected: str, runner: CliRunner) -> None:  # noqa: E741
    """Laguerre's angle of two directions."""
    result = runner.invoke(cli, ["angle", l, m])
    assert result.exit_code == 0
    assert result.output == f"{expected}\n"


def test_ck_hyperbolic(runner: CliRunner) -> None:
    """The standard cone gives the Klein disk distance."""
    result = runner.invoke(cli, ["ck", "hyperbolic", "0 0", "0.5 0"])
    assert result.exit_code == 0
    assert result.output == "0.549306144334\n"


def test_ck_elliptic(runner: CliRunner) -> None:
    """Homogeneous points on the sphere, a quarter turn apart."""
    result = runner.invoke(cli, ["ck", "elliptic", "1 0 0", "0 0 1", "--homogeneous"])
    assert result.exit_code == 0
    assert float(result.output) == pytest.approx(math.pi / 2)


def test_ck_quadric_file(runner: CliRunner, tmp_path: Path) -> None:
    """A scaled cone, `x^2 + y^2 = 4`."""
    quadric = tmp_path / "quadric.json"
    quadric.write_bytes(msgspec.json.encode([[-4, 0, 0], [0, 1, 0], [0, 0, 1]]))
    result = runner.invoke(cli, ["ck", "hyperbolic", "0 0", "1 0", "--quadric", str(quadric)])
    assert result.exit_code == 0
    assert float(result.output) == pytest.approx(math.atanh(0.5))


@pytest.mark.parametrize(
    ("args", "expected"),
    [
        (["0", "1", "1/2"], "inf"),
        (["0", "2", "1/2"], "-1"),
        (["0", "4", "1", "--synthetic"], "-2"),
        (["0 0", "4 0", "1 0", "--synthetic"], "-2 0"),
        (["0", "1", "0.5", "--synthetic"], "inf"),
        (["0", "2", "inf"], "1"),
        (["0", "2", "inf", "--synthetic"], "1"),
        (["inf", "2", "1"], "3"),
    ],
)
def test_harmonic(args: list[str], expected: str, runner: CliRunner) -> None:
    """Conjugates on a line and in the plane, exact."""
    result = runner.invoke(cli, ["harmonic", *args])
    assert result.exit_code == 0
    assert result.output == f"{expected}\n"


def test_staudt(runner: CliRunner) -> None:
    """`2/3` sits at coordinate one half of the scale `0, 1, 2`."""
    result = runner.invoke(cli, ["staudt", "0", "1", "2", "2/3", "--depth", "4"])
    assert result.exit_code == 0
    assert table(result.output) == [{"value": "1/2", "depth": "4", "out_of_range": "false"}]


def test_staudt_affine_scale(runner: CliRunner) -> None:
    """With the frame at infinity the coordinate is the point itself."""
    result = runner.invoke(cli, ["staudt", "0", "1", "inf", "3/8", "--depth", "3"])
    assert result.exit_code == 0
    assert table(result.output) == [{"value": "3/8", "depth": "3", "out_of_range": "false"}]


def test_axioms(runner: CliRunner, triangle_file: Path) -> None:
    """A JSON report with five checks and no failures."""
    result = runner.invoke(cli, ["axioms", str(triangle_file), "--samples", "30", "--seed", "3"])
    assert result.exit_code == 0
    report = msgspec.json.decode(result.output)
    assert report["seed"] == 3
    assert report["samples"] == 30
    assert report["continuity_note"] == CONTINUITY_NOTE
    assert [check["failed"] for check in report["checks"]] == [0] * 5


def test_flats(runner: CliRunner, square_file: Path) -> None:
    """Opposite sides of the square are the parallel pairs."""
    result = runner.invoke(cli, ["flats", str(square_file)])
    assert result.exit_code == 0
    rows = table(result.output)
    assert len(rows) == 6
    assert sum(row["parallel"] == "true" for row in rows) == 2


def test_flats_rational_vertices(runner: CliRunner, thin_triangle_file: Path) -> None:
    """`"p/q"` coordinates survive the round trip through the body file."""
    result = runner.invoke(cli, ["flats", str(thin_triangle_file)])
    assert result.exit_code == 0
    rows = table(result.output)
    assert len(rows) == 3
    assert not any(row["parallel"] == "true" for row in rows)
    assert any("1/3 1/3" in row["first_start"] + row["first_end"] for row in rows)


def test_equality(runner: CliRunner, triangle_file: Path) -> None:
    """A non-collinear triple on two sides of a triangle."""
    result = runner.invoke(cli, ["equality", str(triangle_file)])
    assert result.exit_code == 0
    rows = table(result.output)
    assert [row["name"] for row in rows] == ["A", "C", "B"]
    assert list(rows[0]) == ["name", "x", "y"]
