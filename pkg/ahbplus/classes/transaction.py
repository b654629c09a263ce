"""Transaction-level records exchanged between masters, bus and DDR controller."""

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from ahbplus.constants import TXN_ID_SHIFT
from ahbplus.types import BurstKind, Op


def make_txn_id(master: int, seq: int) -> int:
    """Globally unique transaction id: master in the high bits, sequence below."""
    return (master << TXN_ID_SHIFT) | seq


@dataclass(frozen=True)
class Transaction:
    """One bus read or write with its lifecycle timestamps.

    Timestamps stay ``None`` until reached. ``posted_cycle`` is set when the
    write buffer absorbed the write.
    """

    id: int
    master: int
    op: Op
    addr: int
    burst: BurstKind
    issue_cycle: Optional[int] = None
    grant_cycle: Optional[int] = None
    first_data_cycle: Optional[int] = None
    done_cycle: Optional[int] = None
    posted_cycle: Optional[int] = None

    @property
    def beats(self) -> int:
        return self.burst.beats

    @property
    def is_read(self) -> bool:
        return self.op is Op.READ

    @property
    def is_write(self) -> bool:
        return self.op is Op.WRITE

    def nbytes(self, bus_bytes: int) -> int:
        return self.beats * bus_bytes

    def end_addr(self, bus_bytes: int) -> int:
        """First byte address after the burst."""
        return self.addr + self.nbytes(bus_bytes)

    def overlaps(self, other: "Transaction", bus_bytes: int) -> bool:
        return self.addr < other.end_addr(bus_bytes) and other.addr < self.end_addr(bus_bytes)

    def stamp(self, **timestamps: int) -> "Transaction":
        return replace(self, **timestamps)

    def __repr__(self) -> str:
        return f"Txn({self.id:#x} M{self.master} {self.op.value} {self.addr:#x} x{self.beats})"


@dataclass(frozen=True)
class CompletionDescriptor:
    """What a master port hands back for a data-phase call.

    A descriptor is pending until the final beat is delivered (or the write is
    posted), then ``resolved`` carries first_data/done cycles.
    """

    txn_id: int
    beats: int
    first_data_cycle: Optional[int] = None
    done_cycle: Optional[int] = None
    posted: bool = False

    @property
    def resolved(self) -> bool:
        return self.done_cycle is not None

    @classmethod
    def pending(cls, txn: Transaction) -> "CompletionDescriptor":
        return cls(txn_id=txn.id, beats=txn.beats)

    @classmethod
    def for_posted(cls, txn: Transaction) -> "CompletionDescriptor":
        return cls(
            txn_id=txn.id,
            beats=txn.beats,
            first_data_cycle=txn.posted_cycle,
            done_cycle=txn.posted_cycle,
            posted=True,
        )

    def resolve(self, txn: Transaction) -> "CompletionDescriptor":
        return replace(self, first_data_cycle=txn.first_data_cycle, done_cycle=txn.done_cycle)


@dataclass(frozen=True)
class QosRecord:
    """Per-master QoS register."""

    rt: bool = False
    objective: int = 0
    since_last_grant: int = 0
    violations: int = 0

    def tick(self, requesting: bool, served: bool) -> "QosRecord":
        """Advance one cycle.

        The gap resets when the master is served, grows while it waits and
        freezes while it is not requesting. A real-time violation is counted
        on the cycle the gap moves from objective to objective + 1.
        """
        if served:
            if self.since_last_grant == 0:
                return self
            return replace(self, since_last_grant=0)
        if not requesting:
            return self
        gap = self.since_last_grant + 1
        violations = self.violations
        if self.rt and gap == self.objective + 1:
            violations += 1
        return QosRecord(self.rt, self.objective, gap, violations)

    @property
    def slack(self) -> int:
        return self.objective - self.since_last_grant


@dataclass(frozen=True)
class GrantDecision:
    """Arbiter output for one cycle.

    ``filter_trace[k]`` is the candidate set after filter k+1. ``arbitrated``
    is false on cycles where the next-grant slot was occupied and no
    arbitration took place.
    """

    cycle: int
    granted: Optional[int] = None
    filter_trace: Tuple[Tuple[int, ...], ...] = ((),) * 7
    requesters: Tuple[int, ...] = ()
    txn_id: Optional[int] = None
    pipelined: bool = False
    arbitrated: bool = False

    @classmethod
    def idle(cls, cycle: int, requesters: Tuple[int, ...] = ()) -> "GrantDecision":
        return cls(cycle=cycle, requesters=requesters)


@dataclass(frozen=True)
class NextTxnInfo:
    """Advance notice of a granted transaction that has not reached the DDRC yet."""

    bank: int
    row: int
    op: Op
    master: int
    txn_id: int
