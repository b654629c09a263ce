"""Run-log line formats.

Both formats lead with the simulated cycle when the entry has one, so a log
reads as a timeline regardless of how fast the host ran.
"""

import json
from typing import Any, Dict, Optional, Tuple


def split_cycle(metadata: Optional[Dict[str, Any]]) -> Tuple[Optional[int], Dict[str, Any]]:
    fields = dict(metadata or {})
    return fields.pop("cycle", None), fields


class JSONFormatter:
    """One JSON object per entry: ``cycle``, ``level``, ``scope``, ``message`` and the fields."""

    @staticmethod
    def format(
        level: str,
        scope: str,
        message: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> str:
        cycle, fields = split_cycle(metadata)
        entry = {"cycle": cycle, "level": level.upper(), "scope": scope, "message": message}
        entry.update({key: value for key, value in fields.items() if key not in entry})
        return json.dumps(entry, default=str, separators=(",", ":"))


class HumanFormatter:
    """Single-line entries: ``@cycle LEVEL [scope] message key=value ...``."""

    @staticmethod
    def format(
        level: str,
        scope: str,
        message: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> str:
        cycle, fields = split_cycle(metadata)
        head = f"@{cycle:>8}" if cycle is not None else " " * 9
        parts = [f"{head} {level.upper():<7} [{scope}] {message}"]
        for key, value in fields.items():
            if isinstance(value, (dict, list, tuple)):
                value = json.dumps(value, default=str, separators=(",", ":"))
            parts.append(f"{key}={value}")
        return " ".join(parts)
