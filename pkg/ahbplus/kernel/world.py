"""Two-phase cycle kernel."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from ahbplus.errors import (
    AssertionAbort,
    FatalSelfCheckError,
    RegistrationAfterStart,
    SimulationPreconditionError,
)
from ahbplus.kernel.signals import Cell, Register, Wire
from ahbplus.types import Phase, TerminatedReason

Observer = Callable[["CycleWorld"], None]


class Component(ABC):
    """A unit stepped by the kernel.

    All state that peers may observe, and all state that changes from cycle
    to cycle, lives in cells created with :meth:`register` or :meth:`wire`.
    ``evaluate`` may read any committed ``value`` and write only this
    component's own cells.
    """

    def __init__(self, name: str):
        self.name = name
        self.cells: List[Cell] = []
        self._dirty: List[Cell] = []
        self._held_wires: List[Wire] = []

    def register(self, name: str, init: Any) -> Register:
        cell = Register(name, init, self._dirty)
        self.cells.append(cell)
        return cell

    def wire(self, name: str, default: Any = None) -> Wire:
        cell = Wire(name, default, self._dirty)
        self.cells.append(cell)
        return cell

    @abstractmethod
    def evaluate(self, cycle: int) -> None:
        """Compute next-state from committed state."""

    def commit(self, cycle: int) -> None:
        """Publish staged cells, then run the post-commit hook.

        Only cells driven this cycle are touched, plus wires still holding a
        pulse from the previous cycle.
        """
        dirty = self._dirty
        held = self._held_wires
        if held:
            for wire in held:
                if not wire.driven:
                    wire.value = wire.default
        next_held: List[Wire] = []
        for cell in dirty:
            cell.commit()
            if isinstance(cell, Wire) and cell.value != cell.default:
                next_held.append(cell)
        dirty.clear()
        self._held_wires = next_held
        self.after_commit(cycle)

    def after_commit(self, cycle: int) -> None:
        """Hook for side effects that follow a commit (functional memory)."""

    def is_idle(self) -> bool:
        """True when this component has no outstanding work."""
        return True

    def is_quiescent(self) -> bool:
        """True when evaluate would stage nothing; the kernel may then skip it."""
        return False

    @property
    def completed_count(self) -> int:
        return 0

    def state(self) -> Dict[str, Any]:
        """Committed values of all cells, keyed by cell name."""
        return {cell.name: cell.value for cell in self.cells}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


@dataclass(frozen=True)
class SimSummary:
    """Outcome of :meth:`CycleWorld.run`."""

    total_cycles: int
    completed_transactions: int
    terminated_reason: TerminatedReason

    def to_dict(self) -> Dict[str, Any]:
        return {
            "total_cycles": self.total_cycles,
            "completed_transactions": self.completed_transactions,
            "terminated_reason": self.terminated_reason.value,
        }


class CycleWorld:
    """Hosts components and steps them in evaluate/commit phases.

    Components are called directly in registration order. Because Eval only
    reads committed values, the order never changes the result.
    """

    def __init__(self, logger: Optional[Any] = None):
        self.cycle = 0
        self.phase = Phase.IDLE
        self.components: List[Component] = []
        self.observers: List[Observer] = []
        self.logger = logger
        self._started = False

    def register_component(self, component: Component) -> int:
        """Add a component; returns its dense id (registration order).

        Raises:
            RegistrationAfterStart: if a step has already executed.
        """
        if self._started:
            raise RegistrationAfterStart(
                f"cannot register {component.name} after cycle {self.cycle} has started"
            )
        self.components.append(component)
        return len(self.components) - 1

    def add_observer(self, observer: Observer) -> None:
        """Observers run after every commit and see the committed state."""
        self.observers.append(observer)

    @property
    def started(self) -> bool:
        return self._started

    def component(self, name: str) -> Component:
        for comp in self.components:
            if comp.name == name:
                return comp
        raise KeyError(name)

    def step_cycle(self) -> "CycleWorld":
        """Evaluate every component, then commit every component.

        Raises:
            AssertionAbort: if a fatal self-check fires during the step.
        """
        if self.phase is not Phase.IDLE:
            raise SimulationPreconditionError(f"step_cycle called during {self.phase.value}")
        self._started = True
        cycle = self.cycle
        try:
            self.phase = Phase.EVAL
            for comp in self.components:
                if not comp.is_quiescent():
                    comp.evaluate(cycle)
            self.phase = Phase.COMMIT
            for comp in self.components:
                comp.commit(cycle)
            self.cycle = cycle + 1
            self.phase = Phase.IDLE
            for observer in self.observers:
                observer(self)
        except FatalSelfCheckError as exc:
            self.phase = Phase.IDLE
            raise AssertionAbort(_violation_from_error(exc, cycle)) from exc
        finally:
            self.phase = Phase.IDLE
        return self

    def all_idle(self) -> bool:
        return all(comp.is_idle() for comp in self.components)

    def completed_transactions(self) -> int:
        return sum(comp.completed_count for comp in self.components)

    def run(
        self,
        max_cycles: int,
        stop_when_idle: bool = False,
        stepper: Optional[Callable[["CycleWorld"], Any]] = None,
    ) -> SimSummary:
        """Step until max_cycles, or until everything is drained when stop_when_idle.

        Args:
            max_cycles: Upper bound on simulated cycles (must be > 0).
            stop_when_idle: Stop as soon as every component reports idle.
            stepper: Alternative single-step function (reference stepping).

        Raises:
            SimulationPreconditionError: if max_cycles <= 0.
            AssertionAbort: propagated from a step, with ``summary`` attached.
        """
        if max_cycles <= 0:
            raise SimulationPreconditionError(f"max_cycles must be > 0, got {max_cycles}")
        step = stepper or CycleWorld.step_cycle
        if self.logger:
            self.logger.log_run("start", {"max_cycles": max_cycles, "stop_when_idle": stop_when_idle})
        reason = TerminatedReason.MAX_CYCLES
        try:
            while self.cycle < max_cycles:
                step(self)
                if stop_when_idle and self.all_idle():
                    reason = TerminatedReason.ALL_MASTERS_DONE
                    break
        except AssertionAbort as abort:
            abort.summary = SimSummary(
                total_cycles=abort.violation.cycle + 1,
                completed_transactions=self.completed_transactions(),
                terminated_reason=TerminatedReason.ASSERTION_ABORT,
            )
            if self.logger:
                self.logger.log_run("abort", {"cycle": abort.violation.cycle, "rule": abort.violation.rule})
            raise
        summary = SimSummary(
            total_cycles=self.cycle,
            completed_transactions=self.completed_transactions(),
            terminated_reason=reason,
        )
        if self.logger:
            self.logger.log_run("stop", summary.to_dict())
        return summary


def _violation_from_error(exc: FatalSelfCheckError, cycle: int) -> Any:
    from ahbplus.checker.violation import Violation

    return Violation.fatal(cycle=exc.context.get("cycle", cycle), rule=exc.rule, message=exc.message)
