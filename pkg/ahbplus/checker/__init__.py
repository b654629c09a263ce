"""Fatal self-checks and protocol-property monitors."""

from ahbplus.checker.checker import Checker, starvation_bound_for
from ahbplus.checker.faults import FaultInjector
from ahbplus.checker.rules import CheckRule, RuleSetup, get_rule, register_rule, rule_names
from ahbplus.checker.snapshot import CycleSnapshot, capture
from ahbplus.checker.violation import Violation

__all__ = [
    "CheckRule",
    "Checker",
    "CycleSnapshot",
    "FaultInjector",
    "RuleSetup",
    "Violation",
    "capture",
    "get_rule",
    "register_rule",
    "rule_names",
    "starvation_bound_for",
]
