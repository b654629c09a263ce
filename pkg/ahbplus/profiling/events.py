"""Profiling events."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

Arg = Union[int, str, None]


class EventKind(str, Enum):
    REQUEST_PENDING = "RequestPending"
    GRANTED = "Granted"
    BEAT_DELIVERED = "BeatDelivered"
    BUFFER_OCCUPANCY = "BufferOccupancy"
    QOS_VIOLATION = "QosViolation"
    TXN_COMPLETED = "TxnCompleted"
    WRITE_POSTED = "WritePosted"
    COMMAND = "Command"


@dataclass(frozen=True)
class ProfileEvent:
    """One event, stamped with the cycle it was committed in.

    ``arg`` depends on the kind: grant latency for Granted, beat index for
    BeatDelivered, level for BufferOccupancy, completion latency for
    TxnCompleted, beat count for WritePosted and ``<kind>/<bank>`` for
    Command.
    """

    cycle: int
    kind: EventKind
    master: Optional[int] = None
    txn: Optional[int] = None
    arg: Arg = None

    def to_row(self) -> Tuple[str, str, str, str, str]:
        return (
            str(self.cycle),
            self.kind.value,
            "" if self.master is None else str(self.master),
            "" if self.txn is None else str(self.txn),
            "" if self.arg is None else str(self.arg),
        )

    @classmethod
    def from_row(cls, row) -> "ProfileEvent":
        cycle, kind, master, txn, arg = row
        kind = EventKind(kind)
        value: Arg = arg if arg != "" else None
        if value is not None and kind is not EventKind.COMMAND:
            value = int(value)
        return cls(
            cycle=int(cycle),
            kind=kind,
            master=int(master) if master != "" else None,
            txn=int(txn) if txn != "" else None,
            arg=value,
        )


def command_arg(kind: str, bank: int) -> str:
    return f"{kind}/{bank}"


def split_command_arg(arg: str) -> Tuple[str, int]:
    kind, bank = arg.split("/")
    return kind, int(bank)
