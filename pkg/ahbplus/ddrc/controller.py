"""Transaction-level DDR controller component."""

from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from ahbplus.classes import NextTxnInfo, Transaction
from ahbplus.ddrc.address_map import AddressMap
from ahbplus.ddrc.bank import IDLE_BANK, BankReport, BankState, bank_step, idle_bank_report
from ahbplus.ddrc.commands import NOP, DdrCommand
from ahbplus.ddrc.memory import FunctionalMemory, IntegrityFault
from ahbplus.ddrc.scheduler import QueuedTxn, oldest_per_bank, schedule_command
from ahbplus.ddrc.timing import DdrTiming
from ahbplus.kernel import Component
from ahbplus.types import Op


@dataclass(frozen=True)
class ActiveBurst:
    """A transaction whose column command has issued and whose beats are due."""

    txn: Transaction
    first_beat: int

    @property
    def last_beat(self) -> int:
        return self.first_beat + self.txn.beats - 1


@dataclass(frozen=True)
class BeatEvent:
    """One data beat on the shared data bus."""

    txn_id: int
    master: int
    index: int
    cycle: int
    op: Op
    addr: int


def deliver_beats(
    bursts: Tuple[ActiveBurst, ...], cycle: int, bytes_per_beat: int
) -> Tuple[List[BeatEvent], List[Transaction], List[ActiveBurst]]:
    """Beats due at ``cycle``.

    Returns:
        (beat events, transactions whose last beat this was, bursts still in flight)
    """
    beats: List[BeatEvent] = []
    completed: List[Transaction] = []
    remaining: List[ActiveBurst] = []
    for burst in bursts:
        first = burst.first_beat
        if first <= cycle:
            txn = burst.txn
            index = cycle - first
            beats.append(
                BeatEvent(txn.id, txn.master, index, cycle, txn.op, txn.addr + index * bytes_per_beat)
            )
            if cycle >= burst.last_beat:
                completed.append(txn.stamp(first_data_cycle=first, done_cycle=cycle))
                continue
        remaining.append(burst)
    return beats, completed, remaining


class DdrController(Component):
    """DDR controller with one FSM per bank and a single command bus.

    Inputs (committed bus wires): ``to_ddrc`` carries a granted transaction,
    ``hint`` carries NextTxnInfo for the bus's pipelined next grant.
    Outputs: ``bi_status`` (per-bank report), ``col_issued`` (returns a
    credit to the bus), ``beats`` and ``completed``.
    """

    def __init__(
        self,
        timing: DdrTiming,
        address_map: AddressMap,
        functional_memory: bool = False,
        logger: Optional[Any] = None,
        name: str = "ddrc",
    ):
        super().__init__(name)
        self.timing = timing
        self.address_map = address_map
        self.logger = logger
        self.memory: Optional[FunctionalMemory] = FunctionalMemory() if functional_memory else None
        self._bus: Optional[Any] = None

        nbanks = address_map.banks
        banks = tuple(IDLE_BANK for _ in range(nbanks))
        self.banks = self.register("banks", banks)
        self.queue = self.register("queue", ())
        self.hints = self.register("hints", (None,) * nbanks)
        self.bursts = self.register("bursts", ())
        self.data_bus_free_at = self.register("data_bus_free_at", 0)
        self.bi_status = self.register("bi_status", idle_bank_report(banks, 0))
        self.command = self.wire("command", NOP)
        self.col_issued = self.wire("col_issued", False)
        self.beats = self.wire("beats", ())
        self.completed = self.wire("completed", ())
        self.integrity_faults = self.wire("integrity_faults", ())

    def connect(self, bus: Any) -> None:
        self._bus = bus

    def enqueue(self, queue: Tuple[QueuedTxn, ...], txn: Transaction) -> Tuple[QueuedTxn, ...]:
        row, bank, col = self.address_map.decode(txn.addr)
        return queue + (QueuedTxn(txn, row, bank, col),)

    @staticmethod
    def accept_next_info(
        hints: Tuple[Optional[NextTxnInfo], ...], info: NextTxnInfo
    ) -> Tuple[Optional[NextTxnInfo], ...]:
        """Record a lookahead hint; a newer hint for the same bank replaces the old one."""
        return hints[: info.bank] + (info,) + hints[info.bank + 1 :]

    def reserved_rows(
        self, queue: Tuple[QueuedTxn, ...], hints: Tuple[Optional[NextTxnInfo], ...]
    ) -> Tuple[Optional[int], ...]:
        demand = oldest_per_bank(queue)
        rows: List[Optional[int]] = []
        for index, hint in enumerate(hints):
            if index in demand:
                rows.append(demand[index].row)
            else:
                rows.append(hint.row if hint is not None else None)
        return tuple(rows)

    def evaluate(self, cycle: int) -> None:
        queue = self.queue.value
        hints = self.hints.value
        bus = self._bus
        if bus is not None:
            arriving = bus.to_ddrc.value
            if arriving is not None:
                queue = self.enqueue(queue, arriving)
                bank = queue[-1].bank
                pending = hints[bank]
                if pending is not None and pending.txn_id == arriving.id:
                    hints = hints[:bank] + (None,) + hints[bank + 1 :]
            info = bus.hint.value
            if info is not None:
                hints = self.accept_next_info(hints, info)

        bursts = self.bursts.value
        if bursts:
            beats, completed, remaining = deliver_beats(
                bursts, cycle, self.address_map.bytes_per_beat
            )
            if beats:
                self.beats.next = tuple(beats)
                if self.memory is not None:
                    self._check_reads(beats, cycle)
            if completed:
                self.completed.next = tuple(completed)
            if len(remaining) != len(bursts):
                bursts = tuple(remaining)

        banks = self.banks.value
        free_at = self.data_bus_free_at.value
        cmd = schedule_command(queue, hints, banks, self.timing, cycle, free_at)
        if not cmd.is_nop:
            banks = self._issue(cmd, banks, cycle)
            if cmd.is_column:
                entry = next(e for e in queue if e.txn.id == cmd.txn_id)
                queue = tuple(e for e in queue if e is not entry)
                first = cycle + self.timing.data_lead(entry.txn.is_read)
                bursts = bursts + (ActiveBurst(entry.txn, first),)
                self.data_bus_free_at.next = first + entry.txn.beats
                self.col_issued.next = True

        if queue is not self.queue.value:
            self.queue.next = queue
        if hints is not self.hints.value:
            self.hints.next = hints
        if bursts is not self.bursts.value:
            self.bursts.next = bursts
        report = idle_bank_report(banks, cycle + 1, self.reserved_rows(queue, hints))
        if report != self.bi_status.value:
            self.bi_status.next = report

    def _issue(self, cmd: DdrCommand, banks: Tuple[BankState, ...], cycle: int) -> Tuple[BankState, ...]:
        new_state = bank_step(banks[cmd.bank], cmd, self.timing, cycle)
        self.command.next = cmd
        self.banks.next = banks[: cmd.bank] + (new_state,) + banks[cmd.bank + 1 :]
        if self.logger is not None:
            self.logger.log_command(cycle, cmd)
        return self.banks.next

    def _check_reads(self, beats: List[BeatEvent], cycle: int) -> None:
        faults = []
        for beat in beats:
            if beat.op is Op.READ:
                token = self.memory.check(beat.addr)
                if token is not None:
                    faults.append(IntegrityFault(cycle, beat.txn_id, beat.addr, token))
        if faults:
            self.integrity_faults.next = tuple(faults)

    def after_commit(self, cycle: int) -> None:
        if self.memory is None:
            return
        for beat in self.beats.value:
            if beat.op is Op.WRITE:
                self.memory.write(beat.txn_id, beat.addr)

    @property
    def bank_reports(self) -> Tuple[BankReport, ...]:
        return self.bi_status.value

    def is_idle(self) -> bool:
        return not self.queue.value and not self.bursts.value
