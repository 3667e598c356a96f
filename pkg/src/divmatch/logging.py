"""
Logging configuration for the divmatch package.

This module provides utilities for setting up and using logging
throughout the solvers and the command-line interface.
"""

import logging
import os
import sys
from typing import Optional, TextIO


LOGGER_NAME = "divmatch"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(
    log_level: str = "WARNING",
    log_file: Optional[str] = None,
    stream: Optional[TextIO] = None,
) -> logging.Logger:
    """
    Set up logging for the divmatch package.

    Args:
        log_level: The logging level to use. One of DEBUG, INFO, WARNING, ERROR, CRITICAL.
        log_file: Path to the log file. If None, logs are only written to the stream.
        stream: Stream for the console handler. Defaults to stderr so that
            reports written to stdout stay machine-readable.

    Returns:
        The configured package logger.

    Raises:
        ValueError: If the log level is not recognised.
    """
    numeric_level = getattr(logging, log_level.upper(), None)
    if not isinstance(numeric_level, int):
        raise ValueError(f"Invalid log level: {log_level}")

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(numeric_level)

    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    formatter = logging.Formatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    console_handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str = LOGGER_NAME) -> logging.Logger:
    """
    Get a logger nested under the package logger.

    Args:
        name: Logger name, usually ``__name__`` of the calling module.

    Returns:
        The logger instance.
    """
    if name == LOGGER_NAME or name.startswith(LOGGER_NAME + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{LOGGER_NAME}.{name}")
