"""Application constants."""
from __future__ import annotations

from hilbert_geometry.settings import app
from hilbert_geometry.utils import case_insensitive_string_compare

IS_TEST_ENVIRONMENT = case_insensitive_string_compare(app.ENVIRONMENT, app.TEST_ENVIRONMENT_NAME)
"""Flag indicating if the application is running in a test environment."""

IS_LOCAL_ENVIRONMENT = case_insensitive_string_compare(app.ENVIRONMENT, app.LOCAL_ENVIRONMENT_NAME)
"""Flag indicating if application is running in local development mode."""

EXIT_OK = 0
"""Command completed."""
EXIT_PARSE_ERROR = 2
"""Input could not be parsed; also click's usage error code."""
EXIT_GEOMETRY_ERROR = 3
"""A geometric precondition failed."""
EXIT_NUMERIC_ERROR = 4
"""The computation would lose its precision."""
