"""Static bus parameters."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional, Tuple

from ahbplus.constants import (
    ALWAYS_ON_FILTERS,
    DEFAULT_QOS_URGENCY_THRESHOLD,
    DEFAULT_WRITE_BUFFER_DEPTH,
    NUM_FILTERS,
    SUPPORTED_BUS_WIDTHS,
)
from ahbplus.errors import InvalidSpec


@dataclass(frozen=True)
class BusConfig:
    """Bus width, arbitration switches and write-buffer/pipelining knobs.

    ``filter_enabled[k]`` switches filter k+1. Filters 1 and 7 are always
    effective whatever their flag says.
    """

    bus_width_bits: int = 64
    filter_enabled: Tuple[bool, ...] = (True,) * NUM_FILTERS
    rr_pointer_init: Optional[int] = None
    qos_urgency_threshold: int = DEFAULT_QOS_URGENCY_THRESHOLD
    static_priority: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)
    write_buffer_enabled: bool = True
    write_buffer_depth: int = DEFAULT_WRITE_BUFFER_DEPTH
    next_info_hints: bool = True
    ddrc_credits: int = 1

    def __post_init__(self):
        if self.bus_width_bits not in SUPPORTED_BUS_WIDTHS:
            raise InvalidSpec(f"bus width must be one of {SUPPORTED_BUS_WIDTHS}")
        if len(self.filter_enabled) != NUM_FILTERS:
            raise InvalidSpec(f"expected {NUM_FILTERS} filter flags")
        if self.write_buffer_enabled and self.write_buffer_depth < 1:
            raise InvalidSpec("write buffer depth must be >= 1 when enabled")
        if self.ddrc_credits < 1:
            raise InvalidSpec("ddrc_credits must be >= 1")
        if self.qos_urgency_threshold < 0:
            raise InvalidSpec("qos_urgency_threshold must be >= 0")

    @property
    def bus_bytes(self) -> int:
        return self.bus_width_bits // 8

    def filter_on(self, index: int) -> bool:
        """Whether filter ``index`` (1..7) takes effect."""
        return index in ALWAYS_ON_FILTERS or self.filter_enabled[index - 1]

    def rank(self, master: int) -> int:
        return self._ranks.get(master, 0)

    @cached_property
    def _ranks(self) -> Dict[int, int]:
        return dict(self.static_priority)
