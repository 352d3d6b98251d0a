"""Request/response bodies. Field names here are the wire contract."""

from __future__ import annotations

from pydantic import BaseModel, Field

TripleSlots = list[str | None]  # [subject, predicate, object]; null marks unknown


class AskRequest(BaseModel):
    question: str = Field(..., examples=["What is the capital of France?"])


class TraceStepModel(BaseModel):
    type: str
    text: str
    tool: str | None = None


class AskResponse(BaseModel):
    trace_id: str
    route: str
    final_answer: str
    pending_ids: list[str]
    steps: list[TraceStepModel]


class TraceResponse(AskResponse):
    question: str
    created_at: str


class EvidenceModel(BaseModel):
    doc_id: str
    chunk_index: int
    score: float
    text: str


class HistoryModel(BaseModel):
    action: str
    actor: str
    ts: str


class PendingRecordModel(BaseModel):
    id: str
    question: str
    incomplete: list[TripleSlots]
    completed: list[TripleSlots]
    corrected: list[TripleSlots] | None = None
    edited: list[TripleSlots] | None = None
    evidence: list[EvidenceModel]
    status: str
    history: list[HistoryModel]
    created_at: str
    outcomes: list[str]


class AcceptResponse(BaseModel):
    record: PendingRecordModel
    outcomes: list[str]


class EditRequest(BaseModel):
    triples: list[TripleSlots]


class StatsResponse(BaseModel):
    entities: int
    edges: int
    attributes: int


class HealthResponse(BaseModel):
    status: str = "ok"


class ErrorBody(BaseModel):
    code: str
    message: str
    trace: dict | None = None
