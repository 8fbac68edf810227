"""All the logging config and things are in here.

Library modules log through proxies from `structlog.get_logger()`; nothing
is emitted until [`configure()`][hilbert_geometry.log.configure] has been
called, which the CLI does on start up. Logs go to standard error so that
standard output only carries command results.
"""

from __future__ import annotations

import sys
from typing import TYPE_CHECKING

import structlog

from hilbert_geometry import settings
from hilbert_geometry.constants import IS_LOCAL_ENVIRONMENT, IS_TEST_ENVIRONMENT

from .utils import EventFilter, msgspec_json_renderer

if TYPE_CHECKING:
    from collections.abc import Sequence
    from typing import Any

    from structlog.types import Processor

__all__ = (
    "EventFilter",
    "configure",
    "default_processors",
    "msgspec_json_renderer",
)


default_processors: list[Processor] = [
    structlog.contextvars.merge_contextvars,
    structlog.processors.add_log_level,
    structlog.processors.TimeStamper(fmt="iso", utc=True),
    EventFilter(settings.log.EXCLUDE_KEYS),
]

if IS_LOCAL_ENVIRONMENT:  # pragma: no cover
    default_processors.append(structlog.dev.ConsoleRenderer(colors=True))
else:
    default_processors.extend([structlog.processors.dict_tracebacks, msgspec_json_renderer])


def _logger_factory() -> Any:
    if IS_LOCAL_ENVIRONMENT:  # pragma: no cover
        return structlog.WriteLoggerFactory(file=sys.stderr)
    return structlog.BytesLoggerFactory(file=sys.stderr.buffer)


def configure(processors: Sequence[Processor] | None = None) -> None:
    """Call to configure `structlog` on start up.

    The calls to `structlog.get_logger()` in the library modules return
    proxies to the logger that is eventually called after this
    configurator function has been called.

    Args:
        processors: processor chain, defaults to `default_processors`.
    """
    structlog.configure(
        # CLI tests swap standard error between invocations.
        cache_logger_on_first_use=not IS_TEST_ENVIRONMENT,
        logger_factory=_logger_factory(),
        processors=list(processors if processors is not None else default_processors),
        wrapper_class=structlog.make_filtering_bound_logger(settings.log.LEVEL),
    )
