"""Per-bank DDR state machine.

States carry absolute timestamps instead of countdowns: a timed phase
(Activating, Bursting, Precharging) ends at ``until``. :func:`normalize`
expires finished phases, so a state read at any cycle is exact without
ticking every bank every cycle.
"""

from dataclasses import dataclass, replace
from typing import Optional, Sequence, Tuple

from ahbplus.ddrc.commands import DdrCommand
from ahbplus.ddrc.timing import DdrTiming
from ahbplus.errors import IllegalCommand
from ahbplus.types import BankPhase, CommandKind


@dataclass(frozen=True)
class BankState:
    """One bank: phase, open row and timing stamps.

    Attributes:
        phase: FSM phase.
        row: Open (or opening) row, None when Idle/Precharging.
        until: First cycle after the current timed phase.
        active_since: Cycle of the Activate that opened ``row``.
        txn_id: Transaction owning the burst while Bursting.
    """

    phase: BankPhase = BankPhase.IDLE
    row: Optional[int] = None
    until: Optional[int] = None
    active_since: Optional[int] = None
    txn_id: Optional[int] = None

    def remaining(self, cycle: int) -> int:
        """Cycles left in a timed phase (0 for Idle/Active)."""
        if self.until is None:
            return 0
        return max(0, self.until - cycle)

    @property
    def open_row(self) -> Optional[int]:
        if self.phase in (BankPhase.ACTIVE, BankPhase.BURSTING):
            return self.row
        return None

    def __str__(self) -> str:
        if self.phase is BankPhase.IDLE:
            return "Idle"
        if self.phase is BankPhase.ACTIVE:
            return f"Active(r{self.row})"
        return f"{self.phase.value}(until {self.until})"


IDLE_BANK = BankState()


def normalize(bank: BankState, cycle: int) -> BankState:
    """State of ``bank`` as seen at ``cycle`` with no new command."""
    if bank.until is None or cycle < bank.until:
        return bank
    if bank.phase is BankPhase.PRECHARGING:
        return IDLE_BANK
    # Activating and Bursting both settle into Active on the open row
    return BankState(BankPhase.ACTIVE, row=bank.row, active_since=bank.active_since)


def bank_step(
    bank: BankState, cmd: Optional[DdrCommand], timing: DdrTiming, cycle: int
) -> BankState:
    """Apply ``cmd`` (addressed to this bank, or None) at ``cycle``.

    Raises:
        IllegalCommand: if ``cmd`` is not allowed in the bank's current state.
    """
    state = normalize(bank, cycle)
    if cmd is None or cmd.kind is CommandKind.NOP:
        return state

    if cmd.kind is CommandKind.ACTIVATE:
        if state.phase is not BankPhase.IDLE:
            raise IllegalCommand(cmd.bank, cmd, state, cycle, "bank is not idle")
        return BankState(
            BankPhase.ACTIVATING, row=cmd.row, until=cycle + timing.tRCD, active_since=cycle
        )

    if cmd.kind in (CommandKind.COL_READ, CommandKind.COL_WRITE):
        if state.phase is not BankPhase.ACTIVE:
            raise IllegalCommand(cmd.bank, cmd, state, cycle, "bank is not active")
        if state.row != cmd.row:
            raise IllegalCommand(cmd.bank, cmd, state, cycle, f"row {state.row} is open")
        lead = timing.data_lead(cmd.kind is CommandKind.COL_READ)
        return replace(
            state, phase=BankPhase.BURSTING, until=cycle + lead + cmd.beats, txn_id=cmd.txn_id
        )

    if cmd.kind is CommandKind.PRECHARGE:
        if state.phase is not BankPhase.ACTIVE:
            raise IllegalCommand(cmd.bank, cmd, state, cycle, "bank is not active")
        if cycle < state.active_since + timing.tRAS:
            raise IllegalCommand(
                cmd.bank, cmd, state, cycle, f"tRAS not met (active since {state.active_since})"
            )
        return BankState(BankPhase.PRECHARGING, until=cycle + timing.tRP)

    raise IllegalCommand(cmd.bank, cmd, state, cycle, "unknown command")


@dataclass(frozen=True)
class BankReport:
    """Per-bank status published over the bus interface.

    ``idle`` means the bank has no work queued or announced for it and is
    free to take a new transaction. ``blocked`` withdraws access permission
    while the bank is Bursting or Precharging. ``reserved_row`` is the row the
    next queued demand or hint needs.
    """

    idle: bool = True
    open_row: Optional[int] = None
    blocked: bool = False
    reserved_row: Optional[int] = None

    @property
    def expected_row(self) -> Optional[int]:
        return self.reserved_row if self.reserved_row is not None else self.open_row


def idle_bank_report(
    banks: Sequence[BankState],
    cycle: int,
    reserved_rows: Optional[Sequence[Optional[int]]] = None,
) -> Tuple[BankReport, ...]:
    """Status of every bank as of ``cycle``."""
    reports = []
    for index, bank in enumerate(banks):
        state = normalize(bank, cycle)
        reserved = reserved_rows[index] if reserved_rows is not None else None
        blocked = state.phase in (BankPhase.BURSTING, BankPhase.PRECHARGING)
        reports.append(
            BankReport(
                idle=not blocked and reserved is None,
                open_row=state.open_row,
                blocked=blocked,
                reserved_row=reserved,
            )
        )
    return tuple(reports)
