"""AHB+ main bus: arbiter, QoS registers, request pipelining and the write buffer."""

from typing import Any, Dict, List, Optional, Tuple

from ahbplus.bus.arbiter import EMPTY_TRACE, arbitrate
from ahbplus.bus.config import BusConfig
from ahbplus.bus.filters import FilterContext
from ahbplus.bus.port import MasterPort
from ahbplus.bus.write_buffer import WriteBufferState, drain_request, pop_head, try_posted_write
from ahbplus.classes import GrantDecision, NextTxnInfo, QosRecord, Transaction
from ahbplus.ddrc.address_map import AddressMap
from ahbplus.errors import InvalidSpec, RegistrationAfterStart, UnknownMaster
from ahbplus.kernel import Component


class AhbPlusBus(Component):
    """The bus component.

    Each cycle the bus forwards its pipelined next grant to the DDRC when a
    credit is free, arbitrates when the next-grant slot is empty, and posts
    losing writes into the write buffer. A winner goes straight to the DDRC
    when a credit is left; otherwise it waits in the slot and its
    NextTxnInfo is sent ahead over the bus interface.

    Losing writes are offered to the buffer in rotating order, starting after
    the master that posted last. A request that overlaps a buffered write is
    held back until that entry has drained, and forces the drain meanwhile.

    Outputs: ``decision`` (GrantDecision), ``posted`` (writes absorbed this
    cycle), ``to_ddrc`` (transaction handed to the DDRC), ``hint``.
    """

    def __init__(
        self,
        config: BusConfig,
        address_map: AddressMap,
        logger: Optional[Any] = None,
        name: str = "bus",
    ):
        super().__init__(name)
        self.config = config
        self.address_map = address_map
        self.logger = logger
        self.ports: List[MasterPort] = []
        self.ddrc: Optional[Any] = None
        self._sealed = False

        self.decision = self.register("decision", GrantDecision.idle(-1))
        self.qos = self.register("qos", ())
        self.accepted = self.register("accepted", ())
        self.rr_pointer = self.register("rr_pointer", 0)
        self.post_pointer = self.register("post_pointer", -1)
        self.slot = self.register("slot", None)
        self.credits = self.register("credits", config.ddrc_credits)
        self.wb = self.register(
            "wb", WriteBufferState.empty(config.write_buffer_depth, config.write_buffer_enabled)
        )
        self.to_ddrc = self.wire("to_ddrc", None)
        self.hint = self.wire("hint", None)
        self.posted = self.wire("posted", ())

    # -- construction ---------------------------------------------------

    def connect(self, ddrc: Any) -> None:
        self.ddrc = ddrc

    def attach_port(self, owner: Component) -> MasterPort:
        """Create the port of the next master id, owned by ``owner``."""
        if self._sealed:
            raise RegistrationAfterStart("masters must be attached before the first cycle")
        port = MasterPort(len(self.ports), owner, self, self.ddrc)
        self.ports.append(port)
        n = len(self.ports)
        self.qos.value = self.qos.value + (QosRecord(),)
        self.accepted.value = self.accepted.value + (None,)
        pointer = self.config.rr_pointer_init
        self.rr_pointer.value = pointer % (n + 1) if pointer is not None else n
        return port

    def port(self, master: int) -> MasterPort:
        if not 0 <= master < len(self.ports):
            raise UnknownMaster(master)
        return self.ports[master]

    @property
    def pseudo_id(self) -> int:
        """Arbitration id of the write buffer."""
        return len(self.ports)

    @property
    def n_ports(self) -> int:
        return len(self.ports) + 1

    # -- operations -------------------------------------------------------

    def set_qos(self, master: int, rt: bool, objective: int) -> None:
        """Program the QoS register of ``master`` and reset its counters.

        Raises:
            UnknownMaster: if ``master`` has no port.
            InvalidSpec: if a real-time master gets a non-positive objective.
        """
        if not 0 <= master < len(self.ports):
            raise UnknownMaster(master)
        if rt and objective <= 0:
            raise InvalidSpec(f"real-time master M{master} needs an objective > 0")
        records = list(self.qos.value)
        records[master] = QosRecord(rt=rt, objective=objective)
        self.qos.value = tuple(records)

    def check_grant(self, master: int) -> bool:
        """True iff the most recent committed decision granted ``master``."""
        return self.decision.value.granted == master

    def qos_record(self, master: int) -> QosRecord:
        if not 0 <= master < len(self.ports):
            raise UnknownMaster(master)
        return self.qos.value[master]

    # -- cycle behaviour ----------------------------------------------------

    def _pending_requests(self) -> Dict[int, Transaction]:
        accepted = self.accepted.value
        pending: Dict[int, Transaction] = {}
        for master, port in enumerate(self.ports):
            txn = port.hbusreq.value
            if txn is not None and txn.id != accepted[master]:
                pending[master] = txn
        return pending

    def _filter_context(
        self,
        pending: Dict[int, Transaction],
        wb: WriteBufferState,
        head: Optional[Transaction],
        requesters: Tuple[int, ...],
    ) -> FilterContext:
        txns = dict(pending)
        if head is not None:
            txns[self.pseudo_id] = head
        decode = self.address_map.decode
        targets = {}
        for master in requesters:
            row, bank, _ = decode(txns[master].addr)
            targets[master] = (row, bank)
        hazard_blocked = frozenset()
        if wb.entries:
            bus_bytes = self.config.bus_bytes
            hazard_blocked = frozenset(
                m for m, txn in pending.items() if wb.overlaps(txn, bus_bytes)
            )
        return FilterContext(
            txns=txns,
            targets=targets,
            bank_reports=self.ddrc.bi_status.value,
            qos=self.qos.value,
            config=self.config,
            pseudo_id=self.pseudo_id,
            n_ports=self.n_ports,
            rr_pointer=self.rr_pointer.value,
            wb_occupancy=wb.occupancy,
            wb_depth=wb.depth,
            hazard_blocked=hazard_blocked,
        )

    def evaluate(self, cycle: int) -> None:
        self._sealed = True
        pending = self._pending_requests()
        wb = self.wb.value
        head = drain_request(wb)
        pseudo = self.pseudo_id
        requesters = tuple(sorted(pending))
        if head is not None:
            requesters += (pseudo,)

        credits = self.credits.value
        if self.ddrc.col_issued.value:
            credits += 1
        slot = self.slot.value
        forwarded: Optional[Transaction] = None
        if slot is not None and credits > 0:
            forwarded, slot = slot, None
            credits -= 1

        granted: Optional[int] = None
        if slot is None:
            ctx = self._filter_context(pending, wb, head, requesters)
            granted, trace = arbitrate(requesters, ctx)
            decision = GrantDecision(
                cycle=cycle, granted=granted, filter_trace=trace, requesters=requesters, arbitrated=True
            )
        else:
            decision = GrantDecision(cycle=cycle, filter_trace=EMPTY_TRACE, requesters=requesters)

        accepted = self.accepted.value
        if granted is not None:
            if granted == pseudo:
                wb, txn = pop_head(wb)
            else:
                txn = pending[granted]
                accepted = accepted[:granted] + (txn.id,) + accepted[granted + 1 :]
            txn = txn.stamp(grant_cycle=cycle)
            pipelined = not (credits > 0 and forwarded is None)
            if pipelined:
                slot = txn
                if self.config.next_info_hints:
                    row, bank, _ = self.address_map.decode(txn.addr)
                    self.hint.next = NextTxnInfo(bank, row, txn.op, txn.master, txn.id)
            else:
                forwarded = txn
                credits -= 1
            decision = GrantDecision(
                cycle=cycle,
                granted=granted,
                filter_trace=decision.filter_trace,
                requesters=requesters,
                txn_id=txn.id,
                pipelined=pipelined,
                arbitrated=True,
            )
            self.rr_pointer.next = granted
            if self.logger is not None:
                self.logger.log_grant(cycle, granted, pipelined, decision.filter_trace)

        posted: List[Transaction] = []
        n_masters = len(self.ports)
        pointer = self.post_pointer.value
        for master in sorted(pending, key=lambda m: (m - pointer - 1) % n_masters):
            if master == granted or not wb.has_space:
                continue
            txn = pending[master]
            if not txn.is_write:
                continue
            wb, absorbed = try_posted_write(wb, txn, cycle)
            if absorbed is None:
                continue
            posted.append(absorbed)
            accepted = accepted[:master] + (txn.id,) + accepted[master + 1 :]
            if self.logger is not None:
                self.logger.log_posted(cycle, master, txn.id, wb.occupancy)

        served = {m for m in (granted,) if m is not None} | {t.master for t in posted}
        qos = self.qos.value
        new_qos = tuple(
            record.tick(master in pending, master in served) for master, record in enumerate(qos)
        )
        if new_qos != qos:
            self.qos.next = new_qos

        self.decision.next = decision
        if accepted is not self.accepted.value:
            self.accepted.next = accepted
        if slot is not self.slot.value:
            self.slot.next = slot
        if credits != self.credits.value:
            self.credits.next = credits
        if forwarded is not None:
            self.to_ddrc.next = forwarded
        if posted:
            self.posted.next = tuple(posted)
            self.post_pointer.next = posted[-1].master
        self.wb.next = wb.record_occupancy()

    def is_idle(self) -> bool:
        return (
            self.slot.value is None
            and not self.wb.value.entries
            and self.to_ddrc.value is None
            and self.hint.value is None
            and not self._pending_requests()
        )
