"""Pending-record model and the review state machine.

Statuses move only along pending -> {verified, edited, accepted, rejected},
verified -> {edited, accepted, rejected}, edited -> {accepted, rejected};
accepted and rejected are terminal. At acceptance, corrected triples win
over edited ones, which win over the original completions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum

from kgqa.clock import isoformat
from kgqa.kg.triples import Triple


class PendingStatus(str, Enum):
    PENDING = "pending"
    VERIFIED = "verified"
    EDITED = "edited"
    ACCEPTED = "accepted"
    REJECTED = "rejected"


class QueueAction(str, Enum):
    ACCEPT = "accept"
    EDIT = "edit"
    VERIFY = "verify"
    REJECT = "reject"


LEGAL_TRANSITIONS: dict[PendingStatus, dict[QueueAction, PendingStatus]] = {
    PendingStatus.PENDING: {
        QueueAction.VERIFY: PendingStatus.VERIFIED,
        QueueAction.EDIT: PendingStatus.EDITED,
        QueueAction.ACCEPT: PendingStatus.ACCEPTED,
        QueueAction.REJECT: PendingStatus.REJECTED,
    },
    PendingStatus.VERIFIED: {
        QueueAction.EDIT: PendingStatus.EDITED,
        QueueAction.ACCEPT: PendingStatus.ACCEPTED,
        QueueAction.REJECT: PendingStatus.REJECTED,
    },
    PendingStatus.EDITED: {
        QueueAction.ACCEPT: PendingStatus.ACCEPTED,
        QueueAction.REJECT: PendingStatus.REJECTED,
    },
    PendingStatus.ACCEPTED: {},
    PendingStatus.REJECTED: {},
}

TERMINAL_STATUSES = frozenset({PendingStatus.ACCEPTED, PendingStatus.REJECTED})


@dataclass(frozen=True)
class EvidenceItem:
    doc_id: str
    chunk_index: int
    score: float
    text: str

    def to_json(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "chunk_index": self.chunk_index,
            "score": self.score,
            "text": self.text,
        }

    @classmethod
    def from_json(cls, data: dict) -> "EvidenceItem":
        return cls(
            doc_id=str(data["doc_id"]),
            chunk_index=int(data["chunk_index"]),
            score=float(data["score"]),
            text=str(data["text"]),
        )


@dataclass(frozen=True)
class HistoryEntry:
    action: str
    actor: str
    ts: datetime

    def to_json(self) -> dict:
        return {"action": self.action, "actor": self.actor, "ts": isoformat(self.ts)}


@dataclass
class PendingRecord:
    id: str
    question: str
    incomplete: list[Triple]
    completed: list[Triple]
    corrected: list[Triple] | None = None
    edited: list[Triple] | None = None
    evidence: list[EvidenceItem] = field(default_factory=list)
    status: PendingStatus = PendingStatus.PENDING
    history: list[HistoryEntry] = field(default_factory=list)
    created_at: datetime = None  # type: ignore[assignment]
    outcomes: list[str] = field(default_factory=list)  # add outcomes once accepted


def integration_triples(record: PendingRecord) -> list[Triple]:
    """Triples that acceptance writes into the graph: corrected, else edited,
    else the original completions."""
    if record.corrected:
        return record.corrected
    if record.edited:
        return record.edited
    return record.completed


def record_to_json(record: PendingRecord) -> dict:
    return {
        "id": record.id,
        "question": record.question,
        "incomplete": [t.to_json() for t in record.incomplete],
        "completed": [t.to_json() for t in record.completed],
        "corrected": [t.to_json() for t in record.corrected] if record.corrected else None,
        "edited": [t.to_json() for t in record.edited] if record.edited else None,
        "evidence": [e.to_json() for e in record.evidence],
        "status": record.status.value,
        "history": [h.to_json() for h in record.history],
        "created_at": isoformat(record.created_at),
        "outcomes": list(record.outcomes),
    }
