"""Posted-write buffer.

The buffer absorbs writes whose master did not win arbitration, and drains
them in FIFO order by competing as a pseudo-master.
"""

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from ahbplus.classes import Transaction


@dataclass(frozen=True)
class WriteBufferEntry:
    txn: Transaction
    enqueue_cycle: int


@dataclass(frozen=True)
class WriteBufferState:
    """FIFO contents plus a per-level occupancy histogram (cycles spent at each level)."""

    depth: int
    enabled: bool = True
    entries: Tuple[WriteBufferEntry, ...] = ()
    occupancy_histogram: Tuple[int, ...] = ()

    @classmethod
    def empty(cls, depth: int, enabled: bool = True) -> "WriteBufferState":
        return cls(depth=depth, enabled=enabled, occupancy_histogram=(0,) * (depth + 1))

    @property
    def occupancy(self) -> int:
        return len(self.entries)

    @property
    def has_space(self) -> bool:
        return self.enabled and len(self.entries) < self.depth

    @property
    def head(self) -> Optional[Transaction]:
        return self.entries[0].txn if self.entries else None

    @property
    def high_watermark(self) -> int:
        return self.depth - 1

    def record_occupancy(self) -> "WriteBufferState":
        level = len(self.entries)
        hist = self.occupancy_histogram
        return replace(self, occupancy_histogram=hist[:level] + (hist[level] + 1,) + hist[level + 1 :])

    def overlaps(self, txn: Transaction, bus_bytes: int) -> bool:
        """True if ``txn`` touches bytes of any buffered write."""
        return any(entry.txn.overlaps(txn, bus_bytes) for entry in self.entries)


def try_posted_write(
    state: WriteBufferState, txn: Transaction, cycle: int
) -> Tuple[WriteBufferState, Optional[Transaction]]:
    """Absorb a write that lost arbitration.

    Returns:
        The new state and the posted transaction (stamped ``posted_cycle``),
        or the unchanged state and None when the buffer is disabled or full.
    """
    if not txn.is_write or not state.has_space:
        return state, None
    posted = txn.stamp(posted_cycle=cycle)
    return replace(state, entries=state.entries + (WriteBufferEntry(posted, cycle),)), posted


def drain_request(state: WriteBufferState) -> Optional[Transaction]:
    """The pseudo-master's pending request: the head entry, if any."""
    return state.head


def pop_head(state: WriteBufferState) -> Tuple[WriteBufferState, Transaction]:
    """Remove the head after the pseudo-master was granted."""
    head = state.entries[0]
    return replace(state, entries=state.entries[1:]), head.txn
