"""Enums describing bus transactions and traffic patterns."""

from enum import Enum
from typing import Optional, Union


class Op(str, Enum):
    """Direction of a bus transaction."""

    READ = "read"
    WRITE = "write"


class BurstKind(str, Enum):
    """AHB burst kinds supported by the masters.

    Attributes:
        SINGLE: One beat.
        INCR4: Four-beat incrementing burst.
        INCR8: Eight-beat incrementing burst.
    """

    SINGLE = "single"
    INCR4 = "incr4"
    INCR8 = "incr8"

    @property
    def beats(self) -> int:
        return _BEATS[self]

    @staticmethod
    def from_beats(beats: int) -> "BurstKind":
        for kind, count in _BEATS.items():
            if count == beats:
                return kind
        raise ValueError(f"no burst kind with {beats} beats")


_BEATS = {BurstKind.SINGLE: 1, BurstKind.INCR4: 4, BurstKind.INCR8: 8}


class PatternKind(str, Enum):
    """Burst shape of a master's traffic."""

    SINGLE = "single"
    BURST4 = "burst4"
    BURST8 = "burst8"
    MIXED = "mixed"

    @staticmethod
    def get(key: Optional[Union[str, "PatternKind"]], default=None):
        """Get PatternKind from a key string or enum value."""
        if not key:
            return default
        if isinstance(key, PatternKind):
            return key
        try:
            return PatternKind(key.lower())
        except ValueError:
            return default


class OpMix(str, Enum):
    """Read/write mix of a master."""

    READ_ONLY = "read_only"
    WRITE_ONLY = "write_only"


class AddrMode(str, Enum):
    """How a master advances its addresses."""

    SEQUENTIAL = "sequential"
    RANDOM = "random"
