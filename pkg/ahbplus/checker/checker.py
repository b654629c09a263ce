"""Per-cycle protocol checker."""

from typing import Any, Dict, Iterable, List, Optional, Sequence

from ahbplus.checker.faults import FaultInjector
from ahbplus.checker.rules import CheckRule, RuleSetup, get_rule, rule_names
from ahbplus.checker.snapshot import CycleSnapshot, capture
from ahbplus.checker.violation import Violation
from ahbplus.constants import DEFAULT_STARVATION_BOUND, STARVATION_OBJECTIVE_FACTOR
from ahbplus.ddrc.timing import DdrTiming
from ahbplus.errors import AssertionAbort


def starvation_bound_for(objectives: Iterable[int]) -> int:
    """Default starvation bound: ten times the largest real-time objective."""
    objectives = [objective for objective in objectives if objective > 0]
    if not objectives:
        return DEFAULT_STARVATION_BOUND
    return STARVATION_OBJECTIVE_FACTOR * max(objectives)


class Checker:
    """Kernel observer evaluating every enabled rule after each commit.

    Fatal self-check violations abort the run with :class:`AssertionAbort`;
    protocol-property violations accumulate in :attr:`violations`.
    """

    def __init__(
        self,
        bus: Any,
        ddrc: Any,
        timing: DdrTiming,
        starvation_bound: int = DEFAULT_STARVATION_BOUND,
        disabled: Sequence[str] = (),
        fault: Optional[FaultInjector] = None,
        logger: Optional[Any] = None,
    ):
        self.bus = bus
        self.ddrc = ddrc
        self.logger = logger
        self.fault = fault
        setup = RuleSetup(
            timing=timing,
            initial_banks=ddrc.banks.value,
            starvation_bound=starvation_bound,
        )
        for name in disabled:
            get_rule(name)
        self.rules: Dict[str, CheckRule] = {
            name: get_rule(name)(setup) for name in rule_names() if name not in disabled
        }
        if fault is not None and fault.rule not in self.rules:
            self.rules[fault.rule] = get_rule(fault.rule)(setup)
        self.violations: List[Violation] = []

    def __call__(self, world: Any) -> None:
        self.check_cycle(capture(self.bus, self.ddrc, world.cycle - 1))

    def check_cycle(self, snapshot: CycleSnapshot) -> List[Violation]:
        """Evaluate all rules on ``snapshot``.

        Raises:
            AssertionAbort: on the first fatal violation of the cycle, after
                every rule has been evaluated and recorded.
        """
        if self.fault is not None:
            snapshot = self.fault.apply(snapshot, self.rules)
        found = [
            Violation(snapshot.cycle, rule.kind, rule.name, message)
            for rule in self.rules.values()
            for message in rule.check(snapshot)
        ]
        if not found:
            return found
        self.violations.extend(found)
        if self.logger is not None:
            for violation in found:
                self.logger.log_violation(violation)
        for violation in found:
            if violation.is_fatal:
                raise AssertionAbort(violation)
        return found

    @property
    def fatal(self) -> List[Violation]:
        return [v for v in self.violations if v.is_fatal]

    @property
    def properties(self) -> List[Violation]:
        return [v for v in self.violations if not v.is_fatal]

    def counts(self) -> Dict[str, int]:
        """Violations per rule id, for every enabled rule."""
        counts = {name: 0 for name in self.rules}
        for violation in self.violations:
            counts[violation.rule] = counts.get(violation.rule, 0) + 1
        return counts
