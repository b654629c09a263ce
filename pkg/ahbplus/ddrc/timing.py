"""DDR timing parameters."""

from dataclasses import dataclass

from ahbplus.constants import DEFAULT_TCL, DEFAULT_TRAS, DEFAULT_TRCD, DEFAULT_TRP
from ahbplus.errors import InvalidSpec


@dataclass(frozen=True)
class DdrTiming:
    """Timing constraints in bus cycles.

    Attributes:
        tRCD: Activate to column command.
        tRP: Precharge to bank idle.
        tCL: Column read to first data beat.
        tRAS: Minimum time from Activate to Precharge.
        beats_per_cycle: Data beats transferred per cycle (fixed at 1).
    """

    tRCD: int = DEFAULT_TRCD
    tRP: int = DEFAULT_TRP
    tCL: int = DEFAULT_TCL
    tRAS: int = DEFAULT_TRAS
    beats_per_cycle: int = 1

    def __post_init__(self):
        for name in ("tRCD", "tRP", "tCL", "tRAS"):
            if getattr(self, name) < 1:
                raise InvalidSpec(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.tRAS < self.tRCD:
            raise InvalidSpec(f"tRAS ({self.tRAS}) must be >= tRCD ({self.tRCD})")
        if self.beats_per_cycle != 1:
            raise InvalidSpec("only one beat per cycle is modeled")

    def data_lead(self, is_read: bool) -> int:
        """Cycles from a column command to its first data beat."""
        return self.tCL if is_read else 1
