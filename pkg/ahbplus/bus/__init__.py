"""AHB+ bus core."""

from ahbplus.bus.arbiter import EMPTY_TRACE, apply_filter, arbitrate
from ahbplus.bus.bus import AhbPlusBus
from ahbplus.bus.config import BusConfig
from ahbplus.bus.filters import FilterContext, filter_chain, get_filter, register_filter
from ahbplus.bus.port import MasterPort
from ahbplus.bus.write_buffer import (
    WriteBufferEntry,
    WriteBufferState,
    drain_request,
    pop_head,
    try_posted_write,
)

__all__ = [
    "EMPTY_TRACE",
    "AhbPlusBus",
    "BusConfig",
    "FilterContext",
    "MasterPort",
    "WriteBufferEntry",
    "WriteBufferState",
    "apply_filter",
    "arbitrate",
    "drain_request",
    "filter_chain",
    "get_filter",
    "pop_head",
    "register_filter",
    "try_posted_write",
]
