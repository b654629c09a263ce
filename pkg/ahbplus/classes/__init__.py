"""Core record classes."""

from ahbplus.classes.transaction import (
    CompletionDescriptor,
    GrantDecision,
    NextTxnInfo,
    QosRecord,
    Transaction,
    make_txn_id,
)

__all__ = [
    "CompletionDescriptor",
    "GrantDecision",
    "NextTxnInfo",
    "QosRecord",
    "Transaction",
    "make_txn_id",
]
