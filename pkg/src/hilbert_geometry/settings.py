"""All configuration via environment.

Take note of the environment variable prefixes required for each
settings class, except `AppSettings`.
"""
from __future__ import annotations

# pylint: disable=missing-class-docstring
from pydantic import BaseSettings


# noinspection PyUnresolvedReferences
class AppSettings(BaseSettings):
    """Generic application settings."""

    class Config:
        case_sensitive = True
        env_file = ".env"

    DEBUG: bool = False
    """Show tracebacks for CLI failures."""
    ENVIRONMENT: str = "prod"
    """'local', 'prod', etc."""
    TEST_ENVIRONMENT_NAME: str = "test"
    """Value of ENVIRONMENT used to determine if running tests.

    This should be the value of `ENVIRONMENT` in `tests.env`.
    """
    LOCAL_ENVIRONMENT_NAME: str = "local"
    """Value of ENVIRONMENT used to determine if running in local development
    mode.

    This should be the value of `ENVIRONMENT` in your local `.env` file.
    """
    NAME: str = "hilbert-geometry"
    """Application name."""

    @property
    def slug(self) -> str:
        """Return a slugified name.

        Returns:
            `self.NAME`, all lowercase and hyphens instead of spaces.
        """
        return "-".join(s.lower() for s in self.NAME.split())


class GeometrySettings(BaseSettings):
    """Numerical tolerances of float mode.

    Rational mode ignores these and decides every predicate exactly.
    """

    class Config:
        case_sensitive = True
        env_file = ".env"
        env_prefix = "GEOMETRY_"

    COLLINEAR_TOL: float = 1e-9
    """Max absolute 3x3 minor of normalized homogeneous vectors for collinearity."""
    ZERO_TOL: float = 1e-14
    """Relative size under which a determinant counts as zero."""
    EQUALITY_TOL: float = 1e-9
    """Absolute tolerance on distances when certifying equality."""
    BOUNDARY_GUARD: float = 1e-13
    """Min share of the chord length kept between a point and the boundary."""
    ORACLE_CHORD_TOL: float = 1e-12
    """Bisection tolerance of oracle chords, relative to the body diameter."""
    FLAT_DEDUP_TOL: float = 1e-9
    """Tolerance when deduplicating section planes by normal and offset."""
    HILBERT_SCALE: float = 0.5
    """Default multiplier of the log cross ratio.

    `0.5` makes the unit ball the Klein model, `1.0` is the classical normalization.
    """
    NESTED_SAMPLES: int = 2000
    """Samples drawn by the heuristic containment test of oracle bodies."""


class AxiomSettings(BaseSettings):
    """Order-axiom harness configuration."""

    class Config:
        case_sensitive = True
        env_file = ".env"
        env_prefix = "AXIOMS_"

    WORKERS: int = 4
    """Threads the sample shards are spread across."""
    SHARD_SIZE: int = 250
    """Samples per shard; each shard has its own derived seed."""
    MAX_COUNTEREXAMPLES: int = 10
    """Counterexamples retained per axiom in a report."""


class CLISettings(BaseSettings):
    """Command line output configuration."""

    class Config:
        case_sensitive = True
        env_file = ".env"
        env_prefix = "CLI_"

    SIGNIFICANT_DIGITS: int = 12
    """Significant digits of every printed decimal."""
    DEFAULT_SEED: int = 0
    """Seed of randomized commands when `--seed` is not given."""
    SVG_MARGIN: float = 0.05
    """Margin around the body bounding box, as a share of its extent."""
    SVG_SIZE: int = 600
    """Width of the rendered figure, in pixels."""
    STROKE_WIDTH: float = 0.004
    """Stroke width, as a share of the bounding box diagonal."""


class LogSettings(BaseSettings):
    """Logging config for the application."""

    class Config:
        case_sensitive = True
        env_file = ".env"
        env_prefix = "LOG_"

    LEVEL: int = 30
    """Stdlib log levels.

    Only emit logs at this level, or higher.
    """
    COMPUTATION_EVENT: str = "Computation"
    """Log event name for logs from library operations."""
    CLI_EVENT: str = "CLI"
    """Log event name for logs from command invocations."""
    EXCLUDE_KEYS: list[str] = []
    """Keys dropped from every log event."""


# `.parse_obj()` thing is a workaround for pyright and pydantic interplay, see:
# https://github.com/pydantic/pydantic/issues/3753#issuecomment-1087417884
app = AppSettings.parse_obj({})
"""App settings."""
axioms = AxiomSettings.parse_obj({})
"""Order-axiom harness settings."""
cli = CLISettings.parse_obj({})
"""CLI settings."""
geometry = GeometrySettings.parse_obj({})
"""Geometry tolerance settings."""
log = LogSettings.parse_obj({})
"""Log settings."""
