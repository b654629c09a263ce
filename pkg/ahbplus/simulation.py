"""Builds a simulated platform from a config, runs it and assembles the report."""

import time
from contextlib import nullcontext
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from ahbplus.bus import AhbPlusBus
from ahbplus.checker import Checker, FaultInjector, Violation, starvation_bound_for
from ahbplus.config import SimConfig
from ahbplus.constants import REPORT_SCHEMA_VERSION
from ahbplus.ddrc import DdrController
from ahbplus.errors import AssertionAbort
from ahbplus.kernel import Component, CycleWorld, SimSummary
from ahbplus.logger import logger
from ahbplus.masters import TrafficMaster
from ahbplus.profiling import (
    MetricsReport,
    ProfileAccumulator,
    ProfileCollector,
    TraceWriter,
)
from ahbplus.profiling.events import ProfileEvent
from ahbplus.types import TerminatedReason


@dataclass
class Platform:
    """A built, not yet stepped, simulation."""

    config: SimConfig
    world: CycleWorld
    bus: AhbPlusBus
    ddrc: DdrController
    masters: List[TrafficMaster]
    profiler: ProfileCollector
    checker: Optional[Checker] = None


def build_platform(
    config: SimConfig,
    sim_logger: Optional[Any] = None,
    sinks: Sequence[Callable[[ProfileEvent], None]] = (),
    keep_events: bool = False,
    order: Optional[Sequence[int]] = None,
) -> Platform:
    """Wire bus, DDRC and masters together and register them with a fresh world.

    Args:
        config: Validated config.
        sim_logger: Optional SimLogger handed to every component.
        sinks: Extra consumers of profiling events (e.g. a TraceWriter).
        keep_events: Keep every profiling event in memory.
        order: Registration order as a permutation of ``[bus, ddrc, m0, m1, ...]``.
    """
    address_map = config.address_map()
    timing = config.ddr_timing()
    bus = AhbPlusBus(config.bus_config(), address_map, sim_logger)
    ddrc = DdrController(timing, address_map, config.ddr.functional_memory, sim_logger)
    bus.connect(ddrc)
    ddrc.connect(bus)

    seed = config.run.seed
    entries = config.master_list()
    masters = [
        TrafficMaster(index, entry.pattern_spec(seed), bus, address_map, sim_logger)
        for index, entry in enumerate(entries)
    ]
    for index, entry in enumerate(entries):
        if entry.rt or entry.qos_objective:
            bus.set_qos(index, entry.rt, entry.qos_objective)

    components: List[Component] = [bus, ddrc, *masters]
    if order is not None:
        if sorted(order) != list(range(len(components))):
            raise ValueError(f"order must be a permutation of 0..{len(components) - 1}")
        components = [components[index] for index in order]
    world = CycleWorld(sim_logger)
    for component in components:
        world.register_component(component)

    accumulator = ProfileAccumulator(
        n_masters=len(masters),
        bus_bytes=address_map.bytes_per_beat,
        wb_depth=config.write_buffer.depth,
        qos=[(entry.rt, entry.qos_objective) for entry in entries],
        keep_events=keep_events,
    )
    profiler = ProfileCollector(bus, ddrc, accumulator, sinks)
    world.add_observer(profiler)

    checker = None
    checker_config = config.checker
    if checker_config.enabled or checker_config.fault is not None:
        bound = checker_config.starvation_bound or starvation_bound_for(
            entry.qos_objective for entry in entries if entry.rt
        )
        fault = None
        if checker_config.fault is not None:
            fault = FaultInjector(checker_config.fault.rule, checker_config.fault.cycle)
        checker = Checker(
            bus,
            ddrc,
            timing,
            starvation_bound=bound,
            disabled=checker_config.disabled_rules if checker_config.enabled else (),
            fault=fault,
            logger=sim_logger,
        )
        world.add_observer(checker)
    return Platform(config, world, bus, ddrc, list(masters), profiler, checker)


@dataclass
class SimResult:
    """Everything a run produced."""

    config: SimConfig
    summary: SimSummary
    metrics: MetricsReport
    violations: List[Violation] = field(default_factory=list)
    violation_counts: Dict[str, int] = field(default_factory=dict)
    fault: Optional[Dict[str, Any]] = None
    overrides: List[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    platform: Optional[Platform] = None

    @property
    def aborted(self) -> bool:
        return self.summary.terminated_reason is TerminatedReason.ASSERTION_ABORT

    @property
    def fatal_violation(self) -> Optional[Violation]:
        return next((v for v in self.violations if v.is_fatal), None)

    @property
    def cycles_per_second(self) -> float:
        if self.elapsed_seconds <= 0:
            return 0.0
        return self.summary.total_cycles / self.elapsed_seconds

    def to_report(self) -> Dict[str, Any]:
        """Structured report document; contains no wall-clock data."""
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "config": self.config.resolved(),
            "overrides": list(self.overrides),
            "summary": self.summary.to_dict(),
            "metrics": self.metrics.to_dict(),
            "violations": [violation.to_dict() for violation in self.violations],
            "violation_counts": dict(self.violation_counts),
            "fault": self.fault,
        }


def run_simulation(
    config: SimConfig,
    sim_logger: Optional[Any] = None,
    trace_path: Optional[Union[str, Path]] = None,
    overrides: Sequence[str] = (),
    stepper: Optional[Callable[[CycleWorld], Any]] = None,
    keep_events: bool = False,
    order: Optional[Sequence[int]] = None,
) -> SimResult:
    """Build and run one simulation.

    A fatal assertion does not raise: the run stops and the result carries the
    violation with ``terminated_reason == AssertionAbort``.
    """
    writer = TraceWriter(trace_path) if trace_path is not None else None
    sinks = [writer] if writer is not None else []
    try:
        platform = build_platform(config, sim_logger, sinks, keep_events, order)
        context = (
            sim_logger.log_context("simulation", preset=config.name)
            if sim_logger is not None
            else nullcontext()
        )
        abort: Optional[AssertionAbort] = None
        start = time.perf_counter()
        with context:
            try:
                summary = platform.world.run(
                    config.run.max_cycles,
                    stop_when_idle=config.run.stop_when_idle,
                    stepper=stepper,
                )
            except AssertionAbort as exc:
                abort = exc
                summary = exc.summary
        elapsed = time.perf_counter() - start
    finally:
        if writer is not None:
            writer.close()

    checker = platform.checker
    violations = list(checker.violations) if checker is not None else []
    counts = checker.counts() if checker is not None else {}
    if abort is not None and abort.violation not in violations:
        violations.append(abort.violation)
        counts[abort.violation.rule] = counts.get(abort.violation.rule, 0) + 1
    if summary.terminated_reason is TerminatedReason.MAX_CYCLES and config.run.stop_when_idle:
        logger.warning(
            f"run stopped at max_cycles={config.run.max_cycles} before all masters finished"
        )
    return SimResult(
        config=config,
        summary=summary,
        metrics=platform.profiler.report(summary.total_cycles),
        violations=violations,
        violation_counts=counts,
        fault=checker.fault.to_dict() if checker is not None and checker.fault else None,
        overrides=list(overrides),
        elapsed_seconds=elapsed,
        platform=platform,
    )
