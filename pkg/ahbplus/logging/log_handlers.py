"""Destinations for run logs.

Console logs go to stderr so that anything a command prints on stdout stays
machine-readable. File logs are per run: the file is truncated when the run
starts, and rolls over once it reaches ``max_bytes``.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, Union

DEFAULT_MAX_BYTES = 10 * 1024 * 1024
DEFAULT_BACKUP_COUNT = 5


class RunConsoleHandler(logging.StreamHandler):
    def __init__(self, level: int = logging.INFO):
        super().__init__(stream=sys.stderr)
        self.setLevel(level)


class RunFileHandler(RotatingFileHandler):
    """Rotating log file of one run."""

    def __init__(
        self,
        log_file: Union[str, Path],
        level: int = logging.INFO,
        max_bytes: int = DEFAULT_MAX_BYTES,
        backup_count: int = DEFAULT_BACKUP_COUNT,
    ):
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        super().__init__(
            filename=str(path),
            mode="w",
            maxBytes=max_bytes,
            backupCount=backup_count,
            delay=True,
        )
        self.setLevel(level)


def create_console_handler(level: int = logging.INFO) -> RunConsoleHandler:
    return RunConsoleHandler(level=level)


def create_file_handler(
    log_file: Union[str, Path],
    level: int = logging.INFO,
    max_bytes: int = DEFAULT_MAX_BYTES,
    backup_count: int = DEFAULT_BACKUP_COUNT,
) -> Optional[RunFileHandler]:
    """File handler for ``log_file``, or None when its directory cannot be created."""
    try:
        return RunFileHandler(log_file, level, max_bytes, backup_count)
    except OSError:
        return None
