"""Logging for bisetkit.

The library stays silent unless logging is configured. The CLI enables it
with ``-v``/``--log-level`` or the ``BISETKIT_LOG_LEVEL`` environment
variable. Long computations report their stages through :func:`timed`.
"""

from __future__ import annotations

import logging
import os
import time
from collections.abc import Iterator
from contextlib import contextmanager

LOGGER_NAME = "bisetkit"
LOG_LEVEL_ENV = "BISETKIT_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"

logger = logging.getLogger(LOGGER_NAME)
logger.addHandler(logging.NullHandler())


def _resolve_level(level: str | None) -> int | None:
    raw = (level if level is not None else os.getenv(LOG_LEVEL_ENV, "")).strip()
    if not raw:
        return None
    return getattr(logging, raw.upper(), logging.INFO)


def configure_logging(level: str | None = None) -> None:
    """Attach a stderr handler at ``level`` (or ``BISETKIT_LOG_LEVEL``).

    Without either, the package logger is reset to a null handler.
    """
    resolved = _resolve_level(level)
    # Repeated CLI calls in one process must not stack handlers.
    logger.handlers = []
    logger.propagate = False
    if resolved is None:
        logger.addHandler(logging.NullHandler())
        logger.setLevel(logging.NOTSET)
        return
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(resolved)


@contextmanager
def timed(stage: str) -> Iterator[None]:
    """Log the start and wall time of ``stage`` at INFO."""
    logger.info(f"{stage}: started")
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.info(f"{stage}: finished in {time.perf_counter() - start:.3f}s")
