"""Checker rules.

Each rule inspects one :class:`CycleSnapshot` and returns messages for every
breach it sees. Rules are registered by id with :func:`register_rule`; a
:class:`~ahbplus.checker.checker.Checker` instantiates one of each enabled
rule, so stateful rules keep their history per run.

Every rule also knows how to corrupt a snapshot so that it, and no other
rule, fires (see :mod:`ahbplus.checker.faults`).
"""

from collections import deque
from dataclasses import dataclass, replace
from typing import Deque, Dict, List, Optional, Tuple, Type

from ahbplus.classes import GrantDecision, QosRecord
from ahbplus.checker.snapshot import CycleSnapshot
from ahbplus.ddrc.bank import BankState, normalize
from ahbplus.ddrc.commands import DdrCommand
from ahbplus.ddrc.memory import IntegrityFault
from ahbplus.ddrc.timing import DdrTiming
from ahbplus.types import BankPhase, CommandKind, Op, ViolationKind

_RULE_REGISTRY: Dict[str, Type["CheckRule"]] = {}

__all__ = ["CheckRule", "RuleSetup", "register_rule", "get_rule", "rule_names", "_RULE_REGISTRY"]

_BOGUS_ID = -1


@dataclass(frozen=True)
class RuleSetup:
    """Run constants a rule may need."""

    timing: DdrTiming
    initial_banks: Tuple[BankState, ...]
    starvation_bound: int


def register_rule(name: str, kind: ViolationKind):
    """Decorator registering a rule class under ``name``."""

    def decorator(cls: Type["CheckRule"]) -> Type["CheckRule"]:
        cls.name = name
        cls.kind = kind
        _RULE_REGISTRY[name] = cls
        return cls

    return decorator


def get_rule(name: str) -> Type["CheckRule"]:
    if name not in _RULE_REGISTRY:
        raise KeyError(f"unknown checker rule '{name}'")
    return _RULE_REGISTRY[name]


def rule_names() -> Tuple[str, ...]:
    return tuple(_RULE_REGISTRY)


class CheckRule:
    """Base class for checker rules."""

    name: str = ""
    kind: ViolationKind = ViolationKind.FATAL_SELF_CHECK

    def __init__(self, setup: RuleSetup):
        self.setup = setup

    def check(self, snap: CycleSnapshot) -> List[str]:
        """Messages for every breach in ``snap`` (empty when clean)."""
        return []

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        """A corrupted copy of ``snap`` that breaks this rule, or None if not possible this cycle."""
        return None


@register_rule("grant-exclusivity", ViolationKind.FATAL_SELF_CHECK)
class GrantExclusivity(CheckRule):
    def check(self, snap: CycleSnapshot) -> List[str]:
        if len(snap.granted) > 1:
            return [f"{len(snap.granted)} masters granted: {list(snap.granted)}"]
        return []

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        if snap.granted:
            first = snap.granted[0]
            granted = (first, first + 1)
        else:
            granted = (0, 1)
        requesters = tuple(sorted(set(snap.requesters) | set(granted)))
        return replace(snap, granted=granted, requesters=requesters)


@register_rule("grant-requesters", ViolationKind.FATAL_SELF_CHECK)
class GrantRequesters(CheckRule):
    def check(self, snap: CycleSnapshot) -> List[str]:
        return [
            f"M{master} granted without a request"
            for master in snap.granted
            if master not in snap.requesters
        ]

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        if snap.granted:
            requesters = tuple(m for m in snap.requesters if m not in snap.granted)
            return replace(snap, requesters=requesters)
        outsider = max(snap.requesters, default=snap.pseudo_id) + 1
        return replace(snap, granted=(outsider,))


@register_rule("filter-chain", ViolationKind.FATAL_SELF_CHECK)
class FilterChain(CheckRule):
    """Each filter output is a subset of its input, never empty on a non-empty
    input, and the last stage holds exactly the granted id."""

    def check(self, snap: CycleSnapshot) -> List[str]:
        decision = snap.decision
        if not decision.arbitrated:
            return []
        problems = []
        previous = set(decision.requesters)
        for index, stage in enumerate(decision.filter_trace, start=1):
            current = set(stage)
            if not current <= previous:
                problems.append(f"F{index} added candidates {sorted(current - previous)}")
            if previous and not current:
                problems.append(f"F{index} emptied a non-empty candidate set")
            previous = current
        final = decision.filter_trace[-1]
        if decision.requesters:
            if len(final) != 1:
                problems.append(f"final candidate set {list(final)} is not a singleton")
            elif decision.granted != final[0]:
                problems.append(f"granted M{decision.granted} but the chain chose {final[0]}")
        elif decision.granted is not None:
            problems.append(f"granted M{decision.granted} with no requesters")
        return problems

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        trace = ((0, 1),) * len(snap.decision.filter_trace)
        decision = GrantDecision(
            cycle=snap.cycle, granted=0, filter_trace=trace, requesters=(0, 1), arbitrated=True
        )
        return replace(snap, decision=decision)


def _legality(state: BankState, cmd: DdrCommand) -> Optional[str]:
    if cmd.kind is CommandKind.ACTIVATE:
        return None if state.phase is BankPhase.IDLE else f"Activate while {state}"
    if cmd.is_column:
        if state.phase is not BankPhase.ACTIVE:
            return f"{cmd.kind.value} while {state}"
        if state.row != cmd.row:
            return f"{cmd.kind.value} to row {cmd.row} while row {state.row} is open"
        return None
    if cmd.kind is CommandKind.PRECHARGE:
        return None if state.phase is BankPhase.ACTIVE else f"Precharge while {state}"
    return None


@register_rule("fsm-legality", ViolationKind.FATAL_SELF_CHECK)
class FsmLegality(CheckRule):
    """Commands only in legal bank phases; banks without a command do not move."""

    def __init__(self, setup: RuleSetup):
        super().__init__(setup)
        self.prev = setup.initial_banks

    def check(self, snap: CycleSnapshot) -> List[str]:
        problems = []
        cycle = snap.cycle
        cmd = snap.command
        for bank, (before, after) in enumerate(zip(self.prev, snap.banks)):
            state = normalize(before, cycle)
            if not cmd.is_nop and cmd.bank == bank:
                reason = _legality(state, cmd)
                if reason is not None:
                    problems.append(f"bank {bank}: {reason}")
                continue
            now = normalize(after, cycle)
            if (now.phase, now.row) != (state.phase, state.row):
                problems.append(f"bank {bank} moved from {state} to {now} without a command")
        self.prev = snap.banks
        return problems

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        if not self.prev:
            return None
        state = normalize(self.prev[0], snap.cycle)
        if state.phase in (BankPhase.IDLE, BankPhase.PRECHARGING):
            cmd = DdrCommand(CommandKind.COL_READ, bank=0, row=0, col=0, beats=1, txn_id=_BOGUS_ID)
        else:
            cmd = DdrCommand(CommandKind.ACTIVATE, bank=0, row=state.row)
        return replace(snap, command=cmd)


@register_rule("ddr-timing", ViolationKind.FATAL_SELF_CHECK)
class DdrTimingRule(CheckRule):
    """tRCD, tRP, tRAS and tCL, checked on every legal command and every beat."""

    def __init__(self, setup: RuleSetup):
        super().__init__(setup)
        self.prev = setup.initial_banks
        self.col_cycle: Dict[int, int] = {}

    def check(self, snap: CycleSnapshot) -> List[str]:
        timing = self.setup.timing
        cycle = snap.cycle
        cmd = snap.command
        problems = []
        if not cmd.is_nop and cmd.bank is not None and cmd.bank < len(self.prev):
            before = normalize(self.prev[cmd.bank], cycle)
            after = snap.banks[cmd.bank]
            if _legality(before, cmd) is None:
                problems.extend(self._command_timing(cmd, before, after, cycle, timing))
        for beat in snap.beats:
            issued = self.col_cycle.get(beat.txn_id)
            if issued is None:
                problems.append(f"beat {beat.index} of {beat.txn_id:#x} without a column command")
                continue
            expected = issued + timing.data_lead(beat.op is Op.READ) + beat.index
            if beat.cycle != expected:
                problems.append(
                    f"beat {beat.index} of {beat.txn_id:#x} at {beat.cycle}, expected {expected}"
                )
        for txn in snap.completed:
            self.col_cycle.pop(txn.id, None)
        self.prev = snap.banks
        return problems

    def _command_timing(
        self, cmd: DdrCommand, before: BankState, after: BankState, cycle: int, timing: DdrTiming
    ) -> List[str]:
        if cmd.kind is CommandKind.ACTIVATE:
            expected = cycle + timing.tRCD
        elif cmd.is_column:
            self.col_cycle[cmd.txn_id] = cycle
            expected = cycle + timing.data_lead(cmd.kind is CommandKind.COL_READ) + cmd.beats
        else:
            if cycle < before.active_since + timing.tRAS:
                return [f"Precharge of bank {cmd.bank} at {cycle} breaks tRAS"]
            expected = cycle + timing.tRP
        if after.until != expected:
            return [f"{cmd} ends at {after.until}, expected {expected}"]
        return []

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        if not snap.beats:
            return None
        first = snap.beats[0]
        shifted = replace(first, cycle=first.cycle + 1)
        return replace(snap, beats=(shifted,) + tuple(snap.beats[1:]))


@register_rule("beat-conservation", ViolationKind.FATAL_SELF_CHECK)
class BeatConservation(CheckRule):
    """Beats arrive in index order, one per cycle, and a transaction completes
    only after all of its beats."""

    def __init__(self, setup: RuleSetup):
        super().__init__(setup)
        self.delivered: Dict[int, int] = {}

    def check(self, snap: CycleSnapshot) -> List[str]:
        problems = []
        if len(snap.beats) > 1:
            problems.append(f"{len(snap.beats)} beats on the data bus in one cycle")
        for beat in snap.beats:
            expected = self.delivered.get(beat.txn_id, 0)
            if beat.index != expected:
                problems.append(f"{beat.txn_id:#x} delivered beat {beat.index}, expected {expected}")
            self.delivered[beat.txn_id] = beat.index + 1
        for txn in snap.completed:
            count = self.delivered.pop(txn.id, 0)
            if count != txn.beats:
                problems.append(f"{txn.id:#x} completed after {count} of {txn.beats} beats")
        return problems

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        if not snap.completed or not snap.beats:
            return None
        return replace(snap, beats=())


@register_rule("buffer-bounds", ViolationKind.FATAL_SELF_CHECK)
class BufferBounds(CheckRule):
    def check(self, snap: CycleSnapshot) -> List[str]:
        if not 0 <= len(snap.wb_entries) <= snap.wb_depth:
            return [f"write buffer holds {len(snap.wb_entries)} of {snap.wb_depth}"]
        return []

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        padding = (_BOGUS_ID,) * (snap.wb_depth + 1 - len(snap.wb_entries))
        return replace(snap, wb_entries=snap.wb_entries + padding)


@register_rule("write-buffer-fifo", ViolationKind.FATAL_SELF_CHECK)
class WriteBufferFifo(CheckRule):
    """Posted writes drain in the order they were posted."""

    def __init__(self, setup: RuleSetup):
        super().__init__(setup)
        self.order: Deque[int] = deque()

    def check(self, snap: CycleSnapshot) -> List[str]:
        problems = []
        if snap.drained is not None:
            if not self.order:
                problems.append(f"drained {snap.drained:#x} from an empty buffer")
            else:
                head = self.order.popleft()
                if head != snap.drained:
                    problems.append(f"drained {snap.drained:#x} before {head:#x}")
        self.order.extend(snap.posted)
        return problems

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        return replace(snap, drained=_BOGUS_ID)


@register_rule("qos-deadline", ViolationKind.PROTOCOL_PROPERTY)
class QosDeadline(CheckRule):
    """A real-time master waited past its objective; reported once per crossing."""

    def check(self, snap: CycleSnapshot) -> List[str]:
        return [
            f"M{master} waited {record.since_last_grant} cycles, objective {record.objective}"
            for master, record in enumerate(snap.qos)
            if record.rt and record.since_last_grant == record.objective + 1
        ]

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        if not snap.qos:
            return None
        objective = self.setup.starvation_bound + 1
        late = QosRecord(rt=True, objective=objective, since_last_grant=objective + 1)
        return replace(snap, qos=(late,) + snap.qos[1:])


@register_rule("starvation", ViolationKind.PROTOCOL_PROPERTY)
class Starvation(CheckRule):
    """No requester waits longer than the starvation bound."""

    def check(self, snap: CycleSnapshot) -> List[str]:
        bound = self.setup.starvation_bound
        return [
            f"M{master} starved for more than {bound} cycles"
            for master, record in enumerate(snap.qos)
            if record.since_last_grant == bound + 1
        ]

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        if not snap.qos:
            return None
        starving = QosRecord(since_last_grant=self.setup.starvation_bound + 1)
        return replace(snap, qos=(starving,) + snap.qos[1:])


@register_rule("memory-integrity", ViolationKind.PROTOCOL_PROPERTY)
class MemoryIntegrity(CheckRule):
    """Read beats return what was written for their address."""

    def check(self, snap: CycleSnapshot) -> List[str]:
        return [str(fault) for fault in snap.integrity_faults]

    def inject(self, snap: CycleSnapshot) -> Optional[CycleSnapshot]:
        fake = IntegrityFault(snap.cycle, 0, 0, _BOGUS_ID & 0xFFFF)
        return replace(snap, integrity_faults=tuple(snap.integrity_faults) + (fake,))
