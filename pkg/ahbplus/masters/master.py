"""Traffic-generating master component."""

from dataclasses import dataclass, replace
from typing import Any, Optional, Tuple

from ahbplus.classes import CompletionDescriptor, Transaction, make_txn_id
from ahbplus.ddrc.address_map import AddressMap
from ahbplus.kernel import Component
from ahbplus.masters.pattern import PatternSpec, Stimulus


@dataclass(frozen=True)
class MasterProgress:
    """Committed progress of a master.

    ``outstanding`` is the single in-flight transaction; ``descriptor`` is its
    data-phase descriptor once the master has been granted or posted.
    """

    issued: int = 0
    completed: int = 0
    outstanding: Optional[Transaction] = None
    descriptor: Optional[CompletionDescriptor] = None
    ready_at: int = 0


class TrafficMaster(Component):
    """Issues a pre-generated, seeded request stream through its master port.

    One request is outstanding at a time. The next one is issued
    ``gap`` cycles after the master observes the previous completion.
    """

    def __init__(
        self,
        master_id: int,
        pattern: PatternSpec,
        bus: Any,
        address_map: AddressMap,
        logger: Optional[Any] = None,
    ):
        super().__init__(f"m{master_id}")
        self.master_id = master_id
        self.pattern = pattern
        self.logger = logger
        self.port = bus.attach_port(self)
        if self.port.master != master_id:
            raise ValueError(f"masters must be attached in id order (got {self.port.master})")
        self.stimuli: Tuple[Stimulus, ...] = pattern.generate(master_id, address_map)
        first_gap = self.stimuli[0].gap if self.stimuli else 0
        self.progress = self.register("progress", MasterProgress(ready_at=first_gap))

    @property
    def txn_count(self) -> int:
        return len(self.stimuli)

    def next_stimulus(self, progress: MasterProgress, cycle: int) -> Optional[Transaction]:
        """The transaction to request at ``cycle``, or None if not due (or done)."""
        if progress.outstanding is not None or progress.issued >= len(self.stimuli):
            return None
        if cycle < progress.ready_at:
            return None
        stim = self.stimuli[progress.issued]
        return Transaction(
            id=make_txn_id(self.master_id, progress.issued),
            master=self.master_id,
            op=stim.op,
            addr=stim.addr,
            burst=stim.burst,
        )

    def evaluate(self, cycle: int) -> None:
        progress = self.progress.value
        if progress.outstanding is not None:
            progress = self._data_phase(progress, cycle)
        txn = self.next_stimulus(progress, cycle)
        if txn is not None:
            issued = self.port.request(txn, cycle)
            progress = replace(progress, issued=progress.issued + 1, outstanding=issued)
        if progress is not self.progress.value:
            self.progress.next = progress

    def _data_phase(self, progress: MasterProgress, cycle: int) -> MasterProgress:
        txn = progress.outstanding
        descriptor = progress.descriptor
        if descriptor is None:
            if txn.is_read:
                if not self.port.check_grant():
                    return progress
                descriptor = self.port.read(txn.addr, txn.burst)
            else:
                descriptor = self.port.write(txn.addr, txn.burst, txn.beats)
                if descriptor is None:
                    return progress
        descriptor = self.port.completion(descriptor)
        if not descriptor.resolved:
            if descriptor is progress.descriptor:
                return progress
            return replace(progress, descriptor=descriptor)

        completed = progress.completed + 1
        gap = self.stimuli[progress.issued].gap if progress.issued < len(self.stimuli) else 0
        if self.logger is not None and completed == len(self.stimuli):
            self.logger.log_master(cycle, self.master_id, "done", {"completed": completed})
        return MasterProgress(
            issued=progress.issued,
            completed=completed,
            ready_at=descriptor.done_cycle + 1 + gap,
        )

    @property
    def completed_count(self) -> int:
        return self.progress.value.completed

    @property
    def done(self) -> bool:
        progress = self.progress.value
        return progress.completed >= len(self.stimuli) and progress.outstanding is None

    def is_idle(self) -> bool:
        return self.done

    def is_quiescent(self) -> bool:
        return self.done
