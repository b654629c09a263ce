"""Committed per-cycle state as seen by the checker."""

from dataclasses import dataclass
from typing import Any, Optional, Tuple

from ahbplus.classes import GrantDecision, QosRecord, Transaction
from ahbplus.ddrc.bank import BankState
from ahbplus.ddrc.commands import NOP, DdrCommand
from ahbplus.ddrc.memory import IntegrityFault


@dataclass(frozen=True)
class CycleSnapshot:
    """Outputs committed at the end of ``cycle``.

    ``granted`` and ``requesters`` are kept apart from ``decision`` so a
    fault can corrupt the grant lines without touching the filter trace.
    ``drained`` is the write-buffer entry granted to the pseudo-master.
    """

    cycle: int
    decision: GrantDecision
    granted: Tuple[int, ...] = ()
    requesters: Tuple[int, ...] = ()
    qos: Tuple[QosRecord, ...] = ()
    pseudo_id: int = 0
    wb_entries: Tuple[int, ...] = ()
    wb_depth: int = 0
    posted: Tuple[int, ...] = ()
    drained: Optional[int] = None
    banks: Tuple[BankState, ...] = ()
    command: DdrCommand = NOP
    beats: Tuple[Any, ...] = ()
    completed: Tuple[Transaction, ...] = ()
    integrity_faults: Tuple[IntegrityFault, ...] = ()


def capture(bus: Any, ddrc: Any, cycle: int) -> CycleSnapshot:
    """Build the snapshot of ``cycle`` from committed bus and DDRC cells."""
    decision: GrantDecision = bus.decision.value
    wb = bus.wb.value
    pseudo = bus.pseudo_id
    return CycleSnapshot(
        cycle=cycle,
        decision=decision,
        granted=(decision.granted,) if decision.granted is not None else (),
        requesters=decision.requesters,
        qos=bus.qos.value,
        pseudo_id=pseudo,
        wb_entries=tuple(entry.txn.id for entry in wb.entries),
        wb_depth=wb.depth,
        posted=tuple(txn.id for txn in bus.posted.value),
        drained=decision.txn_id if decision.granted == pseudo else None,
        banks=ddrc.banks.value,
        command=ddrc.command.value,
        beats=ddrc.beats.value,
        completed=ddrc.completed.value,
        integrity_faults=ddrc.integrity_faults.value,
    )
