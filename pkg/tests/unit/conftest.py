"""Unit test specific config."""
from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

import pytest
from click.testing import CliRunner
from structlog.contextvars import clear_contextvars
from structlog.testing import CapturingLogger

from hilbert_geometry import log
from hilbert_geometry.cli import main
from hilbert_geometry.testing import write_body

if TYPE_CHECKING:
    from pathlib import Path

    from pytest import MonkeyPatch

F = Fraction


@pytest.fixture(name="runner")
def fx_runner() -> CliRunner:
    """Invokes the command line in process."""
    return CliRunner()


@pytest.fixture(name="cap_logger")
def fx_cap_logger(monkeypatch: MonkeyPatch) -> CapturingLogger:
    """Used to monkeypatch the command line logger, so we can inspect output."""
    log.configure(log.default_processors)
    # clear context for every test
    clear_contextvars()
    # pylint: disable=protected-access
    logger = main.LOGGER.bind()
    logger._logger = CapturingLogger()
    # drop rendering processor to get a dict, not bytes
    logger._processors = log.default_processors[:-1]
    monkeypatch.setattr(main, "LOGGER", logger)
    return logger._logger


@pytest.fixture(name="disk_file")
def fx_disk_file(tmp_path: Path) -> Path:
    """Unit disk specification."""
    return write_body(
        tmp_path, {"type": "ellipsoid", "center": [0, 0], "shape": [[1, 0], [0, 1]]}, "disk.json"
    )


@pytest.fixture(name="triangle_file")
def fx_triangle_file(tmp_path: Path) -> Path:
    """Triangle `(0, 0), (4, 0), (0, 4)`."""
    return write_body(
        tmp_path, {"type": "polygon", "vertices": [[0, 0], [4, 0], [0, 4]]}, "triangle.json"
    )


@pytest.fixture(name="square_file")
def fx_square_file(tmp_path: Path) -> Path:
    """`[-1, 1]^2` by half-space rows."""
    rows = [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]
    return write_body(tmp_path, {"type": "polytope-h", "halfspaces": rows}, "square.json")


@pytest.fixture(name="thin_triangle_file")
def fx_thin_triangle_file(tmp_path: Path) -> Path:
    """Rational vertices that JSON floats can't hold."""
    vertices = [[0, 0], [1, 0], [F(1, 3), F(1, 3)]]
    return write_body(tmp_path, {"type": "polygon", "vertices": vertices}, "thin.json")
