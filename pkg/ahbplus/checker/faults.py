"""Test-only fault injection.

Correct models never produce illegal states, so each rule is exercised by
corrupting the snapshot the checker sees. A fault is armed at ``cycle`` and
applied on the first cycle at or after it where the target rule can build a
corruption.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from ahbplus.checker.rules import CheckRule, get_rule
from ahbplus.checker.snapshot import CycleSnapshot


@dataclass
class FaultInjector:
    """One-shot corruption aimed at rule ``rule``."""

    rule: str
    cycle: int = 0
    applied_at: Optional[int] = None

    def __post_init__(self):
        get_rule(self.rule)

    @property
    def armed(self) -> bool:
        return self.applied_at is None

    def apply(self, snap: CycleSnapshot, rules: Dict[str, CheckRule]) -> CycleSnapshot:
        if not self.armed or snap.cycle < self.cycle:
            return snap
        corrupted = rules[self.rule].inject(snap)
        if corrupted is None:
            return snap
        self.applied_at = snap.cycle
        return corrupted

    def to_dict(self) -> Dict[str, Any]:
        return {"rule": self.rule, "cycle": self.cycle, "applied_at": self.applied_at}
