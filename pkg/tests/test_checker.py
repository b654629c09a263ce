"""Tests for the protocol checker and fault injection."""

import pytest

from ahbplus.checker import (
    Checker,
    CycleSnapshot,
    FaultInjector,
    RuleSetup,
    Violation,
    get_rule,
    rule_names,
    starvation_bound_for,
)
from ahbplus.classes import GrantDecision, QosRecord
from ahbplus.ddrc import DdrTiming
from ahbplus.simulation import build_platform
from ahbplus.types import TerminatedReason, ViolationKind

from tests.conftest import make_config, run_config

FATAL_RULES = [name for name in rule_names() if get_rule(name).kind is ViolationKind.FATAL_SELF_CHECK]
PROPERTY_RULES = [name for name in rule_names() if name not in FATAL_RULES]


def fired(result):
    return {rule for rule, count in result.violation_counts.items() if count}


class TestRegistry:
    def test_rule_ids(self):
        assert set(rule_names()) == {
            "grant-exclusivity",
            "grant-requesters",
            "filter-chain",
            "fsm-legality",
            "ddr-timing",
            "beat-conservation",
            "buffer-bounds",
            "write-buffer-fifo",
            "qos-deadline",
            "starvation",
            "memory-integrity",
        }
        assert PROPERTY_RULES == ["qos-deadline", "starvation", "memory-integrity"]

    def test_unknown_rule(self):
        with pytest.raises(KeyError):
            get_rule("bus-parity")
        with pytest.raises(KeyError):
            FaultInjector("bus-parity")

    def test_starvation_bound(self):
        assert starvation_bound_for([]) == 20_000
        assert starvation_bound_for([5, 60, 0]) == 600


class TestCleanRuns:
    def test_mixed_traffic_is_clean(self, mixed_traffic):
        result = run_config(mixed_traffic)
        assert result.violations == []
        assert set(result.violation_counts) == set(rule_names())
        assert result.fault is None

    def test_disabled_rules_are_not_counted(self, mixed_traffic):
        result = run_config(mixed_traffic, checker={"disabled_rules": ["starvation"]})
        assert "starvation" not in result.violation_counts

    def test_checker_off(self):
        result = run_config(checker={"enabled": False})
        assert result.platform.checker is None
        assert result.violation_counts == {}


class TestFaultInjection:
    @pytest.mark.parametrize("rule", FATAL_RULES)
    def test_fatal_fault_aborts_with_only_its_rule(self, mixed_traffic, rule):
        result = run_config(mixed_traffic, checker={"fault": {"rule": rule}})
        assert result.aborted
        assert result.summary.terminated_reason is TerminatedReason.ASSERTION_ABORT
        assert result.fatal_violation.rule == rule
        assert fired(result) == {rule}
        assert result.summary.total_cycles == result.fatal_violation.cycle + 1
        assert result.fault["applied_at"] == result.fatal_violation.cycle

    @pytest.mark.parametrize("rule", PROPERTY_RULES)
    def test_property_fault_is_recorded_once(self, mixed_traffic, rule):
        result = run_config(mixed_traffic, checker={"fault": {"rule": rule, "cycle": 5}})
        assert not result.aborted
        assert result.violation_counts[rule] == 1
        assert fired(result) == {rule}
        assert result.violations[0].cycle == 5

    def test_fault_rule_runs_even_when_disabled(self, mixed_traffic):
        result = run_config(
            mixed_traffic,
            checker={"disabled_rules": ["buffer-bounds"], "fault": {"rule": "buffer-bounds"}},
        )
        assert result.fatal_violation.rule == "buffer-bounds"

    def test_fault_waits_for_its_cycle(self, mixed_traffic):
        result = run_config(mixed_traffic, checker={"fault": {"rule": "grant-exclusivity", "cycle": 30}})
        assert result.fatal_violation.cycle == 30


class TestQosRules:
    def setup_rule(self, name, bound=100):
        setup = RuleSetup(timing=DdrTiming(), initial_banks=(), starvation_bound=bound)
        return get_rule(name)(setup)

    def snapshot(self, *records):
        return CycleSnapshot(cycle=0, decision=GrantDecision.idle(0), qos=tuple(records))

    def test_deadline_reported_on_crossing_only(self):
        rule = self.setup_rule("qos-deadline")
        for since, expected in ((10, 0), (11, 1), (12, 0), (40, 0)):
            record = QosRecord(rt=True, objective=10, since_last_grant=since)
            assert len(rule.check(self.snapshot(record))) == expected

    def test_deadline_ignores_best_effort(self):
        rule = self.setup_rule("qos-deadline")
        assert rule.check(self.snapshot(QosRecord(objective=10, since_last_grant=11))) == []

    def test_starvation_bound(self):
        rule = self.setup_rule("starvation", bound=50)
        assert rule.check(self.snapshot(QosRecord(since_last_grant=50))) == []
        assert len(rule.check(self.snapshot(QosRecord(since_last_grant=51)))) == 1

    def test_record_counts_each_crossing(self):
        record = QosRecord(rt=True, objective=2)
        for _ in range(5):
            record = record.tick(requesting=True, served=False)
        assert record.violations == 1
        assert record.since_last_grant == 5
        record = record.tick(requesting=True, served=True)
        assert record.since_last_grant == 0
        for _ in range(3):
            record = record.tick(requesting=True, served=False)
        assert record.violations == 2

    def test_idle_master_does_not_age(self):
        record = QosRecord(rt=True, objective=2, since_last_grant=1)
        assert record.tick(requesting=False, served=False) == record

    def test_deadline_rule_agrees_with_bus_counter(self):
        masters = [
            {"pattern": "burst8", "txn_count": 20, "rt": True, "qos_objective": 5},
            {"pattern": "burst8", "txn_count": 20, "count": 5},
        ]
        result = run_config(masters, filters={"F3": False})
        violations = result.platform.bus.qos_record(0).violations
        assert violations > 0
        assert result.violation_counts["qos-deadline"] == violations


class TestMemoryIntegrity:
    def test_corrupted_cell_is_reported(self):
        config = make_config(ddr={"functional_memory": True})
        platform = build_platform(config)
        platform.ddrc.memory.corrupt(0, 0x48)
        platform.world.run(100, stop_when_idle=True)
        assert platform.checker.counts()["memory-integrity"] == 1
        (violation,) = platform.checker.properties
        assert violation.cycle == 8
        assert platform.checker.fatal == []


class TestViolation:
    def test_serialisation(self):
        violation = Violation.fatal(4, "buffer-bounds", "write buffer holds 5 of 4")
        assert violation.is_fatal
        assert violation.to_dict() == {
            "cycle": 4,
            "kind": "FatalSelfCheck",
            "rule": "buffer-bounds",
            "message": "write buffer holds 5 of 4",
        }
        assert not Violation.protocol(4, "starvation", "late").is_fatal

    def test_checker_rejects_unknown_disabled_rule(self):
        platform = build_platform(make_config(checker={"enabled": False}))
        with pytest.raises(KeyError):
            Checker(platform.bus, platform.ddrc, DdrTiming(), disabled=["bus-parity"])
