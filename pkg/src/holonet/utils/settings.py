"""
Environment-driven settings for holonet.

Values come from the process environment, optionally seeded from a `.env`
file in the project root.
"""

import os
from typing import Optional

from dotenv import load_dotenv

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..", ".."))

THREADS_VARIABLE = "HOLONET_THREADS"
LOG_LEVEL_VARIABLE = "HOLONET_LOG_LEVEL"

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def load_environment(dotenv_path: Optional[str] = None) -> bool:
    """
    Load variables from a `.env` file without overriding the real environment.

    Args:
        dotenv_path: Explicit file to load. Defaults to `.env` in the project root.

    Returns:
        bool: True if a file was found and loaded.
    """
    return load_dotenv(dotenv_path=dotenv_path or os.path.join(PROJECT_ROOT, ".env"), override=False)


def get_thread_count() -> int:
    """
    Get the cap on internal parallelism.

    Returns:
        int: HOLONET_THREADS if set, otherwise the machine's CPU count.

    Raises:
        ValueError: If HOLONET_THREADS is not a positive integer.
    """
    raw = os.getenv(THREADS_VARIABLE)
    if raw is None or not raw.strip():
        return os.cpu_count() or 1

    try:
        threads = int(raw)
    except ValueError as e:
        raise ValueError(f"{THREADS_VARIABLE} must be a positive integer, got {raw!r}") from e

    if threads < 1:
        raise ValueError(f"{THREADS_VARIABLE} must be a positive integer, got {raw!r}")
    return threads


def get_log_level() -> str:
    """
    Get the log level name for command-line runs.

    Returns:
        str: Upper-case level name, WARNING when unset.

    Raises:
        ValueError: If HOLONET_LOG_LEVEL names an unknown level.
    """
    level = (os.getenv(LOG_LEVEL_VARIABLE) or "WARNING").strip().upper()
    if level not in _LOG_LEVELS:
        raise ValueError(f"{LOG_LEVEL_VARIABLE} must be one of {sorted(_LOG_LEVELS)}, got {level!r}")
    return level
