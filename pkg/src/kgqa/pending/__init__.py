"""Review queue for knowledge-graph gaps surfaced by failed queries."""

from kgqa.pending.eventlog import EventLog
from kgqa.pending.records import (
    LEGAL_TRANSITIONS,
    EvidenceItem,
    HistoryEntry,
    PendingRecord,
    PendingStatus,
    QueueAction,
    integration_triples,
    record_to_json,
)
from kgqa.pending.store import KnowledgeQueue

__all__ = [
    "EventLog",
    "EvidenceItem",
    "HistoryEntry",
    "KnowledgeQueue",
    "LEGAL_TRANSITIONS",
    "PendingRecord",
    "PendingStatus",
    "QueueAction",
    "integration_triples",
    "record_to_json",
]
