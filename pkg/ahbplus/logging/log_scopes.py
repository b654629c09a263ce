"""Logging scopes: one per simulator subsystem."""

from enum import Enum
from typing import Iterable, List, Optional

from ahbplus.errors import InvalidSpec


class LogScope(str, Enum):
    """Subsystems a run log can be narrowed to."""

    KERNEL = "kernel"
    ARBITER = "arbiter"
    WRITE_BUFFER = "write_buffer"
    DDRC = "ddrc"
    MASTERS = "masters"
    CHECKER = "checker"
    PROFILING = "profiling"
    ERRORS = "errors"
    ALL = "all"

    @classmethod
    def parse(cls, names: Optional[Iterable[str]]) -> List[str]:
        """Normalise scope names from the CLI or a caller; empty means all.

        Raises:
            InvalidSpec: on an unknown scope name.
        """
        scopes = [name.strip().lower() for name in names or () if name.strip()]
        known = {scope.value for scope in cls}
        unknown = sorted(set(scopes) - known)
        if unknown:
            raise InvalidSpec(f"unknown log scope(s) {unknown} (known: {', '.join(sorted(known))})")
        return scopes or [cls.ALL.value]

    @classmethod
    def is_enabled(cls, scope: str, enabled_scopes: List[str]) -> bool:
        # errors are always reported
        if scope == cls.ERRORS.value or cls.ALL.value in enabled_scopes:
            return True
        return scope in enabled_scopes
