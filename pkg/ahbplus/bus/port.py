"""Transaction-level master port.

The AHB request/grant/data signals become calls on a port: ``request``
raises the request line, ``check_grant`` samples the committed grant and
``read``/``write`` perform the data phase. A port only writes its own
request cell and only reads committed bus and DDRC outputs.
"""

from typing import Any, Optional

from ahbplus.classes import CompletionDescriptor, Transaction
from ahbplus.errors import AlignmentError, InvalidSpec, NotGranted, OutstandingRequest
from ahbplus.kernel import Component
from ahbplus.types import BurstKind, Op


class MasterPort:
    """Port of master ``master``; its request cell belongs to ``owner``."""

    def __init__(self, master: int, owner: Component, bus: Any, ddrc: Any):
        self.master = master
        self.bus = bus
        self.ddrc = ddrc
        self.hbusreq = owner.register("hbusreq", None)

    def request(self, txn: Transaction, cycle: int) -> Transaction:
        """Raise the request line for ``txn``; the bus sees it next cycle.

        Raises:
            OutstandingRequest: if an earlier request is still pending.
            AlignmentError: if the address is not bus aligned.
            AddressOutOfRange: if the burst leaves the memory.
        """
        if txn.master != self.master:
            raise InvalidSpec(f"M{self.master} cannot request for M{txn.master}")
        pending = self.hbusreq.next
        if pending is not None:
            raise OutstandingRequest(self.master, pending.id)
        self._check_address(txn.addr, txn.burst)
        stamped = txn.stamp(issue_cycle=cycle)
        self.hbusreq.next = stamped
        return stamped

    def check_grant(self) -> bool:
        return self.bus.check_grant(self.master)

    def read(self, addr: int, burst: BurstKind) -> CompletionDescriptor:
        """Data phase of a granted read.

        Returns:
            A pending descriptor, resolved later by :meth:`completion`.

        Raises:
            NotGranted: if this master does not hold the grant.
        """
        txn = self._held(addr, burst, Op.READ)
        if not self.check_grant():
            raise NotGranted(self.master)
        self.hbusreq.next = None
        return CompletionDescriptor.pending(txn)

    def write(self, addr: int, burst: BurstKind, beats: int) -> Optional[CompletionDescriptor]:
        """Data phase of a write.

        Returns:
            A resolved descriptor when the write buffer posted it, a pending
            one when the master was granted, None while it is still waiting.
        """
        if beats != burst.beats:
            raise InvalidSpec(f"{burst.value} carries {burst.beats} beats, not {beats}")
        txn = self._held(addr, burst, Op.WRITE)
        for posted in self.bus.posted.value:
            if posted.id == txn.id:
                self.hbusreq.next = None
                return CompletionDescriptor.for_posted(posted)
        if self.check_grant():
            self.hbusreq.next = None
            return CompletionDescriptor.pending(txn)
        return None

    def completion(self, descriptor: CompletionDescriptor) -> CompletionDescriptor:
        """Resolve ``descriptor`` if its final beat was delivered last cycle."""
        if descriptor.resolved:
            return descriptor
        for txn in self.ddrc.completed.value:
            if txn.id == descriptor.txn_id:
                return descriptor.resolve(txn)
        return descriptor

    def _held(self, addr: int, burst: BurstKind, op: Op) -> Transaction:
        txn = self.hbusreq.value
        if txn is None or txn.addr != addr or txn.burst is not burst or txn.op is not op:
            raise NotGranted(self.master, f"has no pending {op.value} at {addr:#x}")
        self._check_address(addr, burst)
        return txn

    def _check_address(self, addr: int, burst: BurstKind) -> None:
        bus_bytes = self.bus.config.bus_bytes
        if addr % bus_bytes:
            raise AlignmentError(addr, self.bus.config.bus_width_bits)
        decode = self.bus.address_map.decode
        decode(addr)
        decode(addr + burst.beats * bus_bytes - 1)
