"""The seven arbitration filters.

Each filter narrows a candidate set of master ids. Filters are registered by
position with :func:`register_filter`; the arbiter applies them in order and
skips any filter that would empty the set.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Mapping, Tuple

from ahbplus.bus.config import BusConfig
from ahbplus.classes import QosRecord, Transaction
from ahbplus.ddrc.bank import BankReport

Candidates = Tuple[int, ...]


@dataclass(frozen=True)
class FilterContext:
    """Everything a filter may look at for one arbitration.

    Attributes:
        txns: Pending transaction per candidate id (write-buffer head for the pseudo-master).
        targets: (row, bank) per candidate id.
        bank_reports: Committed bus-interface report from the DDRC.
        qos: QoS registers of the real masters.
        config: Bus configuration.
        pseudo_id: Id of the write-buffer pseudo-master.
        n_ports: Number of arbitrated ids (masters + pseudo-master).
        rr_pointer: Last granted id.
        wb_occupancy: Write buffer occupancy.
        wb_depth: Write buffer depth.
        hazard_blocked: Requests that overlap a buffered write; they wait
            until the buffer has drained past it.
    """

    txns: Mapping[int, Transaction]
    targets: Mapping[int, Tuple[int, int]]
    bank_reports: Tuple[BankReport, ...]
    qos: Tuple[QosRecord, ...]
    config: BusConfig
    pseudo_id: int
    n_ports: int
    rr_pointer: int
    wb_occupancy: int = 0
    wb_depth: int = 0
    hazard_blocked: FrozenSet[int] = field(default_factory=frozenset)

    @property
    def hazard_urgent(self) -> bool:
        return bool(self.hazard_blocked)

    def report_for(self, candidate: int) -> BankReport:
        return self.bank_reports[self.targets[candidate][1]]


FilterFn = Callable[[Candidates, FilterContext], Candidates]


@dataclass(frozen=True)
class ArbitrationFilter:
    index: int
    name: str
    fn: FilterFn
    always_on: bool = False


_FILTER_REGISTRY: Dict[int, ArbitrationFilter] = {}


def register_filter(index: int, name: str, always_on: bool = False):
    """Decorator registering a filter function at chain position ``index`` (1..7)."""

    def decorator(fn: FilterFn) -> FilterFn:
        _FILTER_REGISTRY[index] = ArbitrationFilter(index, name, fn, always_on)
        return fn

    return decorator


def get_filter(index: int) -> ArbitrationFilter:
    return _FILTER_REGISTRY[index]


def filter_chain() -> Tuple[ArbitrationFilter, ...]:
    return tuple(_FILTER_REGISTRY[k] for k in sorted(_FILTER_REGISTRY))


@register_filter(1, "RequestValid", always_on=True)
def request_valid(candidates: Candidates, ctx: FilterContext) -> Candidates:
    """Drop requests that would overtake an overlapping buffered write."""
    if not ctx.hazard_blocked:
        return candidates
    return tuple(c for c in candidates if c not in ctx.hazard_blocked)


@register_filter(2, "AccessPermission")
def access_permission(candidates: Candidates, ctx: FilterContext) -> Candidates:
    return tuple(c for c in candidates if not ctx.report_for(c).blocked)


@register_filter(3, "QosUrgent")
def qos_urgent(candidates: Candidates, ctx: FilterContext) -> Candidates:
    """Keep only the most urgent real-time masters once any is within the threshold."""
    threshold = ctx.config.qos_urgency_threshold
    urgent: Dict[int, int] = {}
    for c in candidates:
        if c == ctx.pseudo_id:
            continue
        record = ctx.qos[c]
        if record.rt and record.slack <= threshold:
            urgent[c] = record.slack
    if not urgent:
        return candidates
    least = min(urgent.values())
    return tuple(c for c in candidates if urgent.get(c) == least)


@register_filter(4, "WriteBufferPressure")
def write_buffer_pressure(candidates: Candidates, ctx: FilterContext) -> Candidates:
    if ctx.pseudo_id not in candidates:
        return candidates
    if ctx.wb_occupancy >= ctx.wb_depth - 1 or ctx.hazard_urgent:
        return (ctx.pseudo_id,)
    return candidates


@register_filter(5, "IdleBank")
def idle_bank(candidates: Candidates, ctx: FilterContext) -> Candidates:
    """Prefer banks with no pending work, or whose expected row is the one wanted."""
    kept = []
    for c in candidates:
        row, bank = ctx.targets[c]
        report = ctx.bank_reports[bank]
        if report.idle or report.expected_row == row:
            kept.append(c)
    return tuple(kept)


@register_filter(6, "StaticPriority")
def static_priority(candidates: Candidates, ctx: FilterContext) -> Candidates:
    ranks = {c: ctx.config.rank(c) for c in candidates}
    best = max(ranks.values(), default=0)
    return tuple(c for c in candidates if ranks[c] == best)


@register_filter(7, "RoundRobin", always_on=True)
def round_robin(candidates: Candidates, ctx: FilterContext) -> Candidates:
    """First candidate after the pointer, cyclically over all ports."""
    if not candidates:
        return candidates
    n = ctx.n_ports
    pointer = ctx.rr_pointer
    return (min(candidates, key=lambda c: (c - pointer - 1) % n),)

