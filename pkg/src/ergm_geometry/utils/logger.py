"""Logging utilities for ergm_geometry. setup_logger() returns a module-scoped logger
and only attaches a handler if neither the logger nor the root logger already has one.
The handler writes to stderr so that JSON written to stdout by the command line stays
machine-readable. disable_logging() silences the ergm_geometry logger tree only;
third-party loggers are left alone."""

import logging
import sys
from typing import Optional

PACKAGE_LOGGER = "ergm_geometry"


def setup_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Configure and return a logger instance.

    Args:
        name: The name of the logger (typically __name__ from the calling module)
        level: The logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
              Left unset (inherits) if not specified.
    """
    logger = logging.getLogger(name)
    if level is not None:
        logger.setLevel(level.upper())

    # Only add handler if the logger doesn't have any handlers
    # and the root logger doesn't have any handlers
    if not logger.handlers and not logging.getLogger().handlers:
        console_handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    return logger


def set_package_level(level: str) -> None:
    """Set the level on every ergm_geometry logger at once."""
    logging.getLogger(PACKAGE_LOGGER).setLevel(level.upper())
    for name in list(logging.root.manager.loggerDict):
        if name.startswith(PACKAGE_LOGGER + "."):
            logging.getLogger(name).setLevel(level.upper())


def disable_logging() -> None:
    """Silence every ergm_geometry logger.

    Unlike a process-wide logging.disable(), this only raises the level on the
    package's own loggers, so applications embedding the library keep their logs.
    """
    set_package_level("CRITICAL")
    for name in list(logging.root.manager.loggerDict):
        if name == PACKAGE_LOGGER or name.startswith(PACKAGE_LOGGER + "."):
            logging.getLogger(name).setLevel(logging.CRITICAL + 100)
