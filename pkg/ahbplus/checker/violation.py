"""Checker violations."""

from dataclasses import dataclass
from typing import Any, Dict

from ahbplus.types import ViolationKind


@dataclass(frozen=True)
class Violation:
    """One assertion failure.

    Attributes:
        cycle: Cycle whose committed state failed the rule.
        kind: FatalSelfCheck (aborts the run) or ProtocolProperty (recorded).
        rule: Rule id, e.g. ``grant-exclusivity``.
        message: Human readable detail.
    """

    cycle: int
    kind: ViolationKind
    rule: str
    message: str

    @classmethod
    def fatal(cls, cycle: int, rule: str, message: str) -> "Violation":
        return cls(cycle, ViolationKind.FATAL_SELF_CHECK, rule, message)

    @classmethod
    def protocol(cls, cycle: int, rule: str, message: str) -> "Violation":
        return cls(cycle, ViolationKind.PROTOCOL_PROPERTY, rule, message)

    @property
    def is_fatal(self) -> bool:
        return self.kind is ViolationKind.FATAL_SELF_CHECK

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cycle": self.cycle,
            "kind": self.kind.value,
            "rule": self.rule,
            "message": self.message,
        }

    def __str__(self) -> str:
        return f"[{self.kind.value}] {self.rule} @ {self.cycle}: {self.message}"
