"""Per-cycle capture of committed state, used to compare kernels."""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from ahbplus.kernel.world import CycleWorld

CycleState = Dict[str, Dict[str, Any]]


@dataclass
class StateTrace:
    """Observer that records every component's committed cells after each cycle."""

    cycles: List[CycleState] = field(default_factory=list)

    def __call__(self, world: CycleWorld) -> None:
        self.cycles.append({comp.name: comp.state() for comp in world.components})

    def first_difference(self, other: "StateTrace") -> int:
        """Index of the first differing cycle, or -1 when the traces are equal."""
        for index, (mine, theirs) in enumerate(zip(self.cycles, other.cycles)):
            if mine != theirs:
                return index
        if len(self.cycles) != len(other.cycles):
            return min(len(self.cycles), len(other.cycles))
        return -1
