"""Naive snapshot-then-update stepper used as an oracle for CycleWorld.step_cycle.

Every component is evaluated in isolation against the same committed snapshot,
its staged writes are harvested and discarded, and only after all components
have been evaluated are the harvested updates applied to every cell at once.
No quiescence skipping and no dirty tracking.
"""

from typing import Any, Dict, List, Tuple

from ahbplus.errors import AssertionAbort, FatalSelfCheckError
from ahbplus.kernel.signals import Cell
from ahbplus.kernel.world import CycleWorld, _violation_from_error
from ahbplus.types import Phase


def reference_step(world: CycleWorld) -> CycleWorld:
    """Step ``world`` one cycle with isolated evaluation and bulk update."""
    cycle = world.cycle
    world._started = True
    all_cells: List[Cell] = [cell for comp in world.components for cell in comp.cells]
    snapshot = [cell.value for cell in all_cells]
    staged: Dict[int, Tuple[Cell, Any]] = {}
    try:
        world.phase = Phase.EVAL
        # reverse order on purpose: the result must not depend on it
        for comp in reversed(world.components):
            comp.evaluate(cycle)
            for cell in comp.cells:
                if cell.driven:
                    staged[id(cell)] = (cell, cell.next)
            for cell, value in zip(all_cells, snapshot):
                cell.discard()
                if cell.value is not value:
                    raise RuntimeError(f"{comp.name} modified committed cell {cell.name}")
            comp._dirty.clear()
        world.phase = Phase.COMMIT
        for cell in all_cells:
            entry = staged.get(id(cell))
            if entry is not None:
                cell._next = entry[1]
                cell.driven = True
            cell.commit()
        for comp in world.components:
            comp._dirty.clear()
            comp._held_wires = []
            comp.after_commit(cycle)
        world.cycle = cycle + 1
        world.phase = Phase.IDLE
        for observer in world.observers:
            observer(world)
    except FatalSelfCheckError as exc:
        raise AssertionAbort(_violation_from_error(exc, cycle)) from exc
    finally:
        world.phase = Phase.IDLE
    return world
