"""SimLogger - scope-filtered structured logging for simulation runs."""

import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, List, Optional

from ahbplus.logging.log_formatters import HumanFormatter, JSONFormatter
from ahbplus.logging.log_handlers import create_console_handler, create_file_handler
from ahbplus.logging.log_scopes import LogScope


class SimLogger:
    """Structured logger for kernel, arbiter, DDRC and checker activity.

    The logger is an observer only: nothing it does feeds back into the
    simulated state, and reports never contain log output.
    """

    def __init__(
        self,
        level: str = "INFO",
        scopes: Optional[List[str]] = None,
        output: str = "console",  # "console", "file", "both"
        format: str = "human",  # "json", "human", "both" (human on console, json in the file)
        log_file: Optional[str] = None,
        max_bytes: int = 10 * 1024 * 1024,
        backup_count: int = 5,
    ):
        """Initialize SimLogger.

        Args:
            level: Log level (DEBUG, INFO, WARNING, ERROR)
            scopes: Scopes to log (default: all); unknown names raise InvalidSpec
            output: Output destination ("console", "file", "both")
            format: Log format ("json", "human", or "both" for a human console and a JSON file)
            log_file: Path to log file (required if output includes "file")
            max_bytes: Maximum file size before rotation
            backup_count: Number of backup files to keep
        """
        self.level = getattr(logging, level.upper(), logging.INFO)
        self.scopes = LogScope.parse(scopes)
        self.output = output
        self.format = format
        self.log_file = log_file

        console_fmt = JSONFormatter() if format == "json" else HumanFormatter()
        file_fmt = HumanFormatter() if format == "human" else JSONFormatter()

        self.handlers: List[logging.Handler] = []
        self._formats: List[Any] = []

        if output in ["console", "both"]:
            self.handlers.append(create_console_handler(level=self.level))
            self._formats.append(console_fmt)

        if output in ["file", "both"]:
            if not log_file:
                raise ValueError("log_file is required when output includes 'file'")
            handler = create_file_handler(log_file, self.level, max_bytes, backup_count)
            if handler:
                self.handlers.append(handler)
                self._formats.append(file_fmt)

        passthrough = logging.Formatter("%(message)s")
        for handler in self.handlers:
            handler.setFormatter(passthrough)

    def enabled_for(self, level: str, scope: str) -> bool:
        """Cheap pre-check so hot paths can skip building metadata."""
        return (
            getattr(logging, level.upper(), logging.INFO) >= self.level
            and LogScope.is_enabled(scope, self.scopes)
        )

    def _write_log(
        self,
        level: str,
        scope: str,
        message: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> None:
        if not self.enabled_for(level, scope):
            return

        levelno = getattr(logging, level.upper(), logging.INFO)
        for handler, formatter in zip(self.handlers, self._formats):
            record = logging.LogRecord(
                name="ahbplus.sim",
                level=levelno,
                pathname="",
                lineno=0,
                msg=formatter.format(level, scope, message, metadata),
                args=(),
                exc_info=None,
            )
            handler.handle(record)

    def log_run(self, event: str, metadata: Optional[Dict[str, Any]] = None) -> None:
        """Log a run lifecycle event (start, stop, abort)."""
        self._write_log("INFO", LogScope.KERNEL.value, f"Run {event}", metadata)

    def log_grant(self, cycle: int, granted: Optional[int], pipelined: bool, trace: Any) -> None:
        """Log one arbitration decision."""
        if not self.enabled_for("DEBUG", LogScope.ARBITER.value):
            return
        self._write_log(
            "DEBUG",
            LogScope.ARBITER.value,
            "grant" if granted is not None else "no grant",
            {"cycle": cycle, "granted": granted, "pipelined": pipelined, "filter_trace": trace},
        )

    def log_posted(self, cycle: int, master: int, txn_id: int, occupancy: int) -> None:
        """Log a write absorbed by the write buffer."""
        if not self.enabled_for("DEBUG", LogScope.WRITE_BUFFER.value):
            return
        self._write_log(
            "DEBUG",
            LogScope.WRITE_BUFFER.value,
            "posted write",
            {"cycle": cycle, "master": master, "txn": txn_id, "occupancy": occupancy},
        )

    def log_command(self, cycle: int, command: Any) -> None:
        """Log a non-Nop DDR command."""
        if not self.enabled_for("DEBUG", LogScope.DDRC.value):
            return
        self._write_log("DEBUG", LogScope.DDRC.value, str(command), {"cycle": cycle})

    def log_master(
        self, cycle: int, master: int, event: str, metadata: Optional[Dict[str, Any]] = None
    ) -> None:
        """Log a master lifecycle event."""
        self._write_log(
            "INFO",
            LogScope.MASTERS.value,
            f"m{master} {event}",
            {"cycle": cycle, **(metadata or {})},
        )

    def log_violation(self, violation: Any) -> None:
        """Log a checker violation; fatal kinds are logged as errors."""
        level = "ERROR" if violation.is_fatal else "WARNING"
        self._write_log(
            level,
            LogScope.CHECKER.value,
            f"{violation.rule}: {violation.message}",
            {"cycle": violation.cycle, "kind": violation.kind.value},
        )

    def log_error(self, error: Exception, context: Optional[Dict[str, Any]] = None) -> None:
        """Log an error."""
        log_metadata = {
            "error_type": type(error).__name__,
            "error_message": str(error),
            **(context or {}),
        }
        self._write_log(
            "ERROR",
            LogScope.ERRORS.value,
            f"Error occurred: {type(error).__name__}",
            log_metadata,
        )

    def close(self) -> None:
        """Flush and close every handler (file handlers release their file)."""
        for handler in self.handlers:
            handler.close()

    @contextmanager
    def log_context(self, operation_name: str, **kwargs):
        """Context manager for automatic operation logging."""
        start_time = time.perf_counter()
        self._write_log(
            "DEBUG", LogScope.ALL.value, f"Operation started: {operation_name}", kwargs
        )
        try:
            yield
            elapsed = time.perf_counter() - start_time
            self._write_log(
                "INFO",
                LogScope.ALL.value,
                f"Operation completed: {operation_name}",
                {**kwargs, "elapsed_seconds": round(elapsed, 6)},
            )
        except Exception as e:
            elapsed = time.perf_counter() - start_time
            self.log_error(
                e, context={**kwargs, "operation": operation_name, "elapsed_seconds": elapsed}
            )
            raise

