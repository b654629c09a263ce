"""Priority command scheduler for the DDR controller."""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from ahbplus.classes import NextTxnInfo, Transaction
from ahbplus.ddrc import commands
from ahbplus.ddrc.bank import BankState, normalize
from ahbplus.ddrc.commands import DdrCommand
from ahbplus.ddrc.timing import DdrTiming
from ahbplus.types import BankPhase


@dataclass(frozen=True)
class QueuedTxn:
    """A granted transaction waiting in the DDRC for its column command."""

    txn: Transaction
    row: int
    bank: int
    col: int


def oldest_per_bank(queue: Sequence[QueuedTxn]) -> Dict[int, QueuedTxn]:
    """Demand of each bank: its oldest queued transaction (grant order per bank)."""
    demand: Dict[int, QueuedTxn] = {}
    for entry in queue:
        if entry.bank not in demand:
            demand[entry.bank] = entry
    return demand


def schedule_command(
    queue: Sequence[QueuedTxn],
    hints: Sequence[Optional[NextTxnInfo]],
    banks: Sequence[BankState],
    timing: DdrTiming,
    cycle: int,
    data_bus_free_at: int = 0,
) -> DdrCommand:
    """Pick the single command to issue this cycle.

    Priority, ties to the lowest bank: column command for a row hit, Activate
    for demand, Precharge for a demand row conflict, Activate for a hint,
    Precharge for a hint, Nop. Hints only steer banks with no queued demand,
    and a bank that is bursting or opening takes no command at all.
    """
    demand = oldest_per_bank(queue)
    states = [normalize(bank, cycle) for bank in banks]

    act_demand = pre_demand = act_hint = pre_hint = None
    for index, state in enumerate(states):
        want = demand.get(index)
        if want is not None:
            if state.phase is BankPhase.ACTIVE:
                if state.row == want.row:
                    lead = timing.data_lead(want.txn.is_read)
                    if cycle + lead >= data_bus_free_at:
                        maker = commands.col_read if want.txn.is_read else commands.col_write
                        return maker(index, want.row, want.col, want.txn.beats, want.txn.id)
                elif pre_demand is None and cycle >= state.active_since + timing.tRAS:
                    pre_demand = commands.precharge(index)
            elif state.phase is BankPhase.IDLE and act_demand is None:
                act_demand = commands.activate(index, want.row)
            continue
        hint = hints[index] if index < len(hints) else None
        if hint is None:
            continue
        if state.phase is BankPhase.IDLE:
            if act_hint is None:
                act_hint = commands.activate(index, hint.row)
        elif state.phase is BankPhase.ACTIVE and state.row != hint.row:
            if pre_hint is None and cycle >= state.active_since + timing.tRAS:
                pre_hint = commands.precharge(index)

    return act_demand or pre_demand or act_hint or pre_hint or commands.NOP
