"""Parastab Logging Utility.

Configures structured logging using structlog. Logs are written to stderr
so that stdout carries only the JSON or text report.
"""

import logging
import sys
from typing import Any

import structlog
from structlog.types import Processor


def setup_logging() -> None:
    """Configure structured logging for the application."""
    from config.settings import get_settings  # config imports this module

    settings = get_settings()
    log_level = getattr(logging, settings.log_level.upper(), logging.WARNING)

    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.StackInfoRenderer(),
        structlog.dev.set_exc_info,
        structlog.processors.TimeStamper(fmt="iso"),
    ]

    if settings.log_format == "json":
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        cache_logger_on_first_use=False,
    )

    # Bridge standard logging to structlog
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=log_level,
    )


def get_logger(name: str) -> Any:
    """Get a structured logger instance.

    Args:
        name: The name of the logger (usually the module path).

    Returns:
        A structlog bound logger.
    """
    return structlog.get_logger(name)
