"""Bus and master-port profiling.

:class:`ProfileCollector` observes committed bus and DDRC outputs after
every cycle and turns them into :class:`ProfileEvent` records.
:class:`ProfileAccumulator` folds events into running totals and
:func:`finalize` turns those into a :class:`MetricsReport`.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from ahbplus.errors import SimulationPreconditionError, ZeroCycles
from ahbplus.profiling.events import EventKind, ProfileEvent, command_arg, split_command_arg
from ahbplus.profiling.report import MasterMetrics, MetricsReport
from ahbplus.types import CommandKind

EventSink = Callable[[ProfileEvent], None]

_COLUMN_KINDS = (CommandKind.COL_READ.value, CommandKind.COL_WRITE.value)


@dataclass
class ProfileAccumulator:
    """Running totals for one run.

    Args:
        n_masters: Number of real master ports; higher ids are the write buffer.
        bus_bytes: Bytes per beat.
        qos: ``(rt, objective)`` per master, echoed into the report.
        keep_events: Also retain every recorded event in :attr:`events`.
    """

    n_masters: int
    bus_bytes: int
    wb_depth: int = 0
    qos: Sequence[Tuple[bool, int]] = ()
    keep_events: bool = False

    events: List[ProfileEvent] = field(default_factory=list)
    last_cycle: int = -1
    pending: Dict[int, int] = field(default_factory=dict)
    grants: Dict[int, int] = field(default_factory=dict)
    beat_cycles: int = 0
    beats: int = 0
    occupancy: List[int] = field(default_factory=list)
    posted: int = 0
    commands: Dict[str, int] = field(default_factory=dict)
    row_hits: int = 0
    columns: int = 0
    _last_beat_cycle: int = -1
    _bank_last: Dict[int, str] = field(default_factory=dict)
    _txn_beats: Dict[int, int] = field(default_factory=dict)
    _posted_txns: Set[int] = field(default_factory=set)
    _draining: Dict[int, int] = field(default_factory=dict)
    grant_latency: Dict[int, List[int]] = field(default_factory=dict)
    completion_latency: Dict[int, List[int]] = field(default_factory=dict)
    completed: Dict[int, int] = field(default_factory=dict)
    completed_bytes: Dict[int, int] = field(default_factory=dict)
    qos_violations: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.occupancy:
            self.occupancy = [0] * (self.wb_depth + 1)

    @property
    def open_txns(self) -> int:
        """Transactions with beats still expected or bytes not yet credited."""
        return len(self._txn_beats) + len(self._draining)

    def advance(self, cycle: int) -> None:
        if cycle < self.last_cycle:
            raise SimulationPreconditionError(
                f"event at cycle {cycle} recorded after cycle {self.last_cycle}"
            )
        self.last_cycle = cycle

    def count_pending(self, cycle: int, requesters: int) -> None:
        """Same totals as ``requesters`` REQUEST_PENDING events at ``cycle``."""
        self.pending[cycle] = self.pending.get(cycle, 0) + requesters

    def count_occupancy(self, level: int) -> None:
        if level >= len(self.occupancy):
            self.occupancy.extend([0] * (level + 1 - len(self.occupancy)))
        self.occupancy[level] += 1

    def record(self, event: ProfileEvent) -> None:
        """Fold ``event`` into the totals.

        Raises:
            SimulationPreconditionError: if ``event`` is older than the last one.
        """
        cycle = event.cycle
        self.advance(cycle)
        if self.keep_events:
            self.events.append(event)

        kind = event.kind
        master = event.master
        if kind is EventKind.REQUEST_PENDING:
            self.count_pending(cycle, 1)
        elif kind is EventKind.GRANTED:
            self.grants[cycle] = self.grants.get(cycle, 0) + 1
            if master is not None and master < self.n_masters and event.arg is not None:
                self.grant_latency.setdefault(master, []).append(event.arg)
        elif kind is EventKind.BEAT_DELIVERED:
            self.beats += 1
            if cycle != self._last_beat_cycle:
                self.beat_cycles += 1
                self._last_beat_cycle = cycle
            txn = event.txn
            left = self._draining.get(txn)
            if left is None:
                self._txn_beats[txn] = self._txn_beats.get(txn, 0) + 1
            elif left > 1:
                self._draining[txn] = left - 1
            else:
                del self._draining[txn]
        elif kind is EventKind.BUFFER_OCCUPANCY:
            self.count_occupancy(event.arg)
        elif kind is EventKind.QOS_VIOLATION:
            self.qos_violations[master] = self.qos_violations.get(master, 0) + 1
        elif kind is EventKind.WRITE_POSTED:
            self.posted += 1
            self._txn_beats[event.txn] = event.arg
            self._posted_txns.add(event.txn)
            self._draining[event.txn] = event.arg
        elif kind is EventKind.TXN_COMPLETED:
            nbytes = self._txn_beats.pop(event.txn, 0) * self.bus_bytes
            self.completed[master] = self.completed.get(master, 0) + 1
            self.completed_bytes[master] = self.completed_bytes.get(master, 0) + nbytes
            self.completion_latency.setdefault(master, []).append(event.arg)
            if event.txn in self._posted_txns:
                self._posted_txns.discard(event.txn)
                self.grant_latency.setdefault(master, []).append(event.arg)
        elif kind is EventKind.COMMAND:
            cmd, bank = split_command_arg(event.arg)
            self.commands[cmd] = self.commands.get(cmd, 0) + 1
            if cmd in _COLUMN_KINDS:
                self.columns += 1
                if self._bank_last.get(bank) in _COLUMN_KINDS:
                    self.row_hits += 1
            self._bank_last[bank] = cmd


def _stats(values: List[int]) -> Tuple[float, int, float]:
    if not values:
        return 0.0, 0, 0.0
    arr = np.asarray(values, dtype=np.int64)
    return float(arr.mean()), int(arr.max()), float(np.percentile(arr, 95))


def finalize(acc: ProfileAccumulator, total_cycles: int) -> MetricsReport:
    """Compute the report.

    utilization = beat-carrying cycles / total_cycles;
    contention = sum over cycles of max(0, pending requesters - grants) / total_cycles.

    Raises:
        ZeroCycles: if ``total_cycles`` is not positive.
    """
    if total_cycles <= 0:
        raise ZeroCycles(f"cannot finalize a run of {total_cycles} cycles")
    waiting = sum(
        max(0, count - acc.grants.get(cycle, 0)) for cycle, count in acc.pending.items()
    )
    masters = []
    for master in range(acc.n_masters):
        rt, objective = acc.qos[master] if master < len(acc.qos) else (False, 0)
        g_mean, g_max, _ = _stats(acc.grant_latency.get(master, []))
        c_mean, c_max, c_p95 = _stats(acc.completion_latency.get(master, []))
        nbytes = acc.completed_bytes.get(master, 0)
        masters.append(
            MasterMetrics(
                master=master,
                rt=rt,
                objective=objective,
                completed=acc.completed.get(master, 0),
                bytes=nbytes,
                throughput=nbytes / total_cycles,
                grant_latency_mean=g_mean,
                grant_latency_max=g_max,
                completion_latency_mean=c_mean,
                completion_latency_max=c_max,
                completion_latency_p95=c_p95,
                qos_violations=acc.qos_violations.get(master, 0),
            )
        )
    return MetricsReport(
        total_cycles=total_cycles,
        utilization=acc.beat_cycles / total_cycles,
        contention=waiting / total_cycles,
        beats_delivered=acc.beats,
        bytes_delivered=acc.beats * acc.bus_bytes,
        masters=tuple(masters),
        buffer_occupancy_histogram=tuple(acc.occupancy),
        write_buffer_posted=acc.posted,
        command_counts=dict(sorted(acc.commands.items())),
        row_hit_ratio=acc.row_hits / acc.columns if acc.columns else 0.0,
    )


class ProfileCollector:
    """Kernel observer emitting profiling events for bus and master ports."""

    def __init__(
        self,
        bus: Any,
        ddrc: Any,
        accumulator: ProfileAccumulator,
        sinks: Sequence[EventSink] = (),
    ):
        self.bus = bus
        self.ddrc = ddrc
        self.accumulator = accumulator
        self.sinks = list(sinks)
        self._violations = tuple(record.violations for record in bus.qos.value)

    def emit(self, event: ProfileEvent) -> None:
        self.accumulator.record(event)
        for sink in self.sinks:
            sink(event)

    def __call__(self, world: Any) -> None:
        cycle = world.cycle - 1
        bus = self.bus
        ddrc = self.ddrc
        emit = self.emit
        decision = bus.decision.value
        # nobody sees individual events: fold the per-cycle ones straight in
        folding = not self.sinks and not self.accumulator.keep_events

        if folding:
            self.accumulator.advance(cycle)
            if decision.requesters:
                self.accumulator.count_pending(cycle, len(decision.requesters))
        else:
            for master in decision.requesters:
                emit(ProfileEvent(cycle, EventKind.REQUEST_PENDING, master=master))
        if decision.granted is not None:
            txn = self._granted_txn(decision.txn_id)
            latency = None
            if txn is not None:
                start = txn.posted_cycle if decision.granted == bus.pseudo_id else txn.issue_cycle
                latency = cycle - start if start is not None else None
            emit(ProfileEvent(cycle, EventKind.GRANTED, decision.granted, decision.txn_id, latency))

        for txn in bus.posted.value:
            emit(ProfileEvent(cycle, EventKind.WRITE_POSTED, txn.master, txn.id, txn.beats))
            emit(
                ProfileEvent(
                    cycle, EventKind.TXN_COMPLETED, txn.master, txn.id, cycle - txn.issue_cycle
                )
            )

        cmd = ddrc.command.value
        if not cmd.is_nop:
            emit(
                ProfileEvent(
                    cycle, EventKind.COMMAND, txn=cmd.txn_id, arg=command_arg(cmd.kind.value, cmd.bank)
                )
            )
        for beat in ddrc.beats.value:
            emit(ProfileEvent(cycle, EventKind.BEAT_DELIVERED, beat.master, beat.txn_id, beat.index))
        for txn in ddrc.completed.value:
            if txn.posted_cycle is None:
                emit(
                    ProfileEvent(
                        cycle, EventKind.TXN_COMPLETED, txn.master, txn.id, cycle - txn.issue_cycle
                    )
                )

        if folding:
            self.accumulator.count_occupancy(bus.wb.value.occupancy)
        else:
            emit(ProfileEvent(cycle, EventKind.BUFFER_OCCUPANCY, arg=bus.wb.value.occupancy))

        qos = bus.qos.value
        seen = self._violations
        if any(record.violations != before for record, before in zip(qos, seen)):
            for master, (record, before) in enumerate(zip(qos, seen)):
                for _ in range(record.violations - before):
                    emit(ProfileEvent(cycle, EventKind.QOS_VIOLATION, master=master))
            self._violations = tuple(record.violations for record in qos)

    def _granted_txn(self, txn_id: Optional[int]) -> Optional[Any]:
        if txn_id is None:
            return None
        for txn in (self.bus.to_ddrc.value, self.bus.slot.value):
            if txn is not None and txn.id == txn_id:
                return txn
        return None

    def report(self, total_cycles: int) -> MetricsReport:
        return finalize(self.accumulator, total_cycles)
