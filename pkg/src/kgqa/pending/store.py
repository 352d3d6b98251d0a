"""Queue store: lifecycle actions over pending records, persisted as events.

Mutations serialize through one lock, append to the event log, and are
re-derivable by replay; acceptance writes to the graph outside the log so a
replay never re-adds triples.
"""

from __future__ import annotations

import threading
from datetime import datetime

from kgqa.clock import Clock, SystemClock, isoformat
from kgqa.errors import (
    EmptyRecord,
    GatewayError,
    IllegalTransition,
    IncompleteTriple,
    InvalidTriple,
    LlmFailure,
    MalformedOutput,
    NoEvidence,
    SlotMismatch,
    TerminalState,
    UnknownId,
    UnknownStatus,
)
from kgqa.kg.store import KnowledgeGraph
from kgqa.kg.triples import Triple
from kgqa.llm.gateway import Gateway
from kgqa.llm.output_parsers import parse_completions
from kgqa.llm.roles import LlmRole, format_documents
from kgqa.pending.eventlog import EventLog
from kgqa.pending.records import (
    LEGAL_TRANSITIONS,
    TERMINAL_STATUSES,
    EvidenceItem,
    HistoryEntry,
    PendingRecord,
    PendingStatus,
    QueueAction,
    integration_triples,
)
from kgqa.retrieval.bm25 import Bm25Index, search
from kgqa.retrieval.corpus import make_verification_query

EVIDENCE_TOP_K = 10


def _parse_ts(ts: str) -> datetime:
    return datetime.fromisoformat(ts.replace("Z", "+00:00"))


class KnowledgeQueue:
    def __init__(self, log: EventLog | None = None, clock: Clock | None = None):
        self.log = log or EventLog()
        self.clock = clock or SystemClock()
        self._records: dict[str, PendingRecord] = {}
        self._counter = 0
        self._lock = threading.Lock()
        for event in self.log.events():
            self._apply(event)

    # --- event application (shared by live mutation and replay) -----------

    def _apply(self, event: dict) -> PendingRecord:
        record_id = event["record_id"]
        action = event["action"]
        payload = event["payload"]
        ts = _parse_ts(event["ts"])

        if action == "enqueue":
            record = PendingRecord(
                id=record_id,
                question=payload["question"],
                incomplete=[Triple.from_json(t) for t in payload["incomplete"]],
                completed=[Triple.from_json(t) for t in payload["completed"]],
                created_at=ts,
            )
            record.history.append(HistoryEntry(action="enqueue", actor=event["actor"], ts=ts))
            self._records[record_id] = record
            num = record_id.split(":")[-1]
            if num.isdigit():
                self._counter = max(self._counter, int(num))
            return record

        record = self._records[record_id]
        if action == "verify":
            record.evidence = [EvidenceItem.from_json(e) for e in payload["evidence"]]
            record.corrected = [Triple.from_json(t) for t in payload["corrected"]]
            record.status = PendingStatus.VERIFIED
        elif action == "edit":
            record.edited = [Triple.from_json(t) for t in payload["triples"]]
            record.status = PendingStatus.EDITED
        elif action == "accept":
            record.outcomes = [str(o) for o in payload.get("outcomes", [])]
            record.status = PendingStatus.ACCEPTED
        elif action == "reject":
            record.status = PendingStatus.REJECTED
        else:  # pragma: no cover - log is produced by this class only
            raise ValueError(f"unknown event action {action!r}")
        record.history.append(HistoryEntry(action=action, actor=event["actor"], ts=ts))
        return record

    def _commit(self, record_id: str, action: str, payload: dict, actor: str) -> PendingRecord:
        ts = isoformat(self.clock.now())
        event = self.log.append(record_id, action, payload, actor, ts)
        return self._apply(event)

    def _get_for_action(self, record_id: str, action: QueueAction) -> PendingRecord:
        record = self._records.get(record_id)
        if record is None:
            raise UnknownId(f"no pending record {record_id!r}")
        if record.status in TERMINAL_STATUSES:
            raise TerminalState(f"record {record_id} is {record.status.value}")
        if action not in LEGAL_TRANSITIONS[record.status]:
            raise IllegalTransition(
                f"cannot {action.value} a record in status {record.status.value}"
            )
        return record

    # --- operations --------------------------------------------------------

    def enqueue(
        self,
        question: str,
        incomplete: list[Triple],
        completed: list[Triple],
        actor: str = "agent",
    ) -> str:
        if not incomplete or not completed:
            raise EmptyRecord("a pending record needs at least one triple")
        if len(incomplete) != len(completed):
            raise SlotMismatch(
                f"{len(incomplete)} incomplete triple(s) vs {len(completed)} completion(s)"
            )
        for want, got in zip(incomplete, completed):
            if want.unknown_count == 0:
                raise SlotMismatch(f"triple has nothing to complete: {want.render()}")
            if not got.is_complete:
                raise SlotMismatch(f"completion still has unknown slots: {got.render()}")
            if not want.agrees_with(got):
                raise SlotMismatch(
                    f"completion {got.render()} disagrees with known slots of {want.render()}"
                )
        with self._lock:
            self._counter += 1
            record_id = f"pr:{self._counter:04d}"
            payload = {
                "question": question,
                "incomplete": [t.to_json() for t in incomplete],
                "completed": [t.to_json() for t in completed],
            }
            self._commit(record_id, "enqueue", payload, actor)
            return record_id

    def verify(
        self,
        record_id: str,
        index: Bm25Index,
        gateway: Gateway,
        actor: str = "admin",
    ) -> PendingRecord:
        """Retrieve evidence for the record and ask the model for corrections.

        Zero hits refuse verification rather than confirming by silence; any
        model-side failure leaves the record untouched.
        """
        with self._lock:
            record = self._get_for_action(record_id, QueueAction.VERIFY)
            query = make_verification_query(record.incomplete + record.completed, record.question)
            hits = search(index, query, k=EVIDENCE_TOP_K)
            if not hits:
                raise NoEvidence(f"no corpus evidence found for record {record_id}")
            evidence = [
                EvidenceItem(
                    doc_id=h.chunk.doc_id,
                    chunk_index=h.chunk.chunk_index,
                    score=h.score,
                    text=h.chunk.text,
                )
                for h in hits
            ]
            try:
                response = gateway.call(
                    LlmRole.RAG_VERIFICATION,
                    question=record.question,
                    incomplete="\n".join(t.render() for t in record.incomplete),
                    completed="\n".join(t.render() for t in record.completed),
                    documents=format_documents([e.text for e in evidence]),
                )
                corrected = parse_completions(response, record.incomplete)
            except GatewayError as exc:
                raise LlmFailure(f"verification backend failed: {exc}", cause=exc) from exc
            except (MalformedOutput, SlotMismatch, InvalidTriple) as exc:
                raise LlmFailure(f"verification output rejected: {exc}", cause=exc) from exc
            payload = {
                "evidence": [e.to_json() for e in evidence],
                "corrected": [t.to_json() for t in corrected],
            }
            return self._commit(record_id, "verify", payload, actor)

    def accept(self, record_id: str, kg: KnowledgeGraph, actor: str = "admin") -> list[str]:
        with self._lock:
            record = self._get_for_action(record_id, QueueAction.ACCEPT)
            triples = integration_triples(record)
            for t in triples:
                if not t.is_complete:
                    raise IncompleteTriple(f"cannot integrate {t.render()}")
            outcomes = [kg.add_triple(t).value for t in triples]
            self._commit(record_id, "accept", {"outcomes": outcomes}, actor)
            return outcomes

    def edit(self, record_id: str, triples: list[Triple], actor: str = "admin") -> PendingRecord:
        if not triples:
            raise EmptyRecord("edit payload must contain at least one triple")
        for t in triples:
            if not t.is_complete:
                raise IncompleteTriple(f"edited triples must be fully known: {t.render()}")
        with self._lock:
            self._get_for_action(record_id, QueueAction.EDIT)
            payload = {"triples": [t.to_json() for t in triples]}
            return self._commit(record_id, "edit", payload, actor)

    def reject(self, record_id: str, actor: str = "admin") -> PendingRecord:
        with self._lock:
            self._get_for_action(record_id, QueueAction.REJECT)
            return self._commit(record_id, "reject", {}, actor)

    def get(self, record_id: str) -> PendingRecord:
        record = self._records.get(record_id)
        if record is None:
            raise UnknownId(f"no pending record {record_id!r}")
        return record

    def list(self, status: str | None = None) -> list[PendingRecord]:
        """Records newest-first, optionally filtered to one status."""
        wanted: PendingStatus | None = None
        if status is not None:
            try:
                wanted = PendingStatus(status)
            except ValueError:
                raise UnknownStatus(f"unknown status filter {status!r}") from None
        records = [
            r for r in self._records.values() if wanted is None or r.status is wanted
        ]
        records.sort(key=lambda r: (r.created_at, r.id), reverse=True)
        return records
