"""Trace records for one question's handling.

A trace is (Thought, Action, Observation) groups followed by a terminal
Thought and the final answer. The rendered record shape — {"type", "text",
"tool"} — is part of the API contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from enum import Enum

from kgqa.clock import isoformat


class Route(str, Enum):
    KG_HIT = "kg_hit"
    KG_MISS = "kg_miss"
    DIRECT_ONLY = "direct_only"


@dataclass(frozen=True)
class TraceStep:
    kind: str  # "thought" | "action" | "observation" | "final"
    text: str
    tool: str | None = None

    @classmethod
    def thought(cls, text: str) -> "TraceStep":
        return cls(kind="thought", text=text)

    @classmethod
    def action(cls, tool: str, tool_input: str) -> "TraceStep":
        return cls(kind="action", text=tool_input, tool=tool)

    @classmethod
    def observation(cls, text: str) -> "TraceStep":
        return cls(kind="observation", text=text)

    @classmethod
    def final(cls, text: str) -> "TraceStep":
        return cls(kind="final", text=text)

    def to_record(self) -> dict:
        return {"type": self.kind, "text": self.text, "tool": self.tool}


@dataclass(frozen=True)
class AgentTrace:
    id: str
    question: str
    steps: tuple[TraceStep, ...]
    route: Route
    final_answer: str
    pending_ids: tuple[str, ...]
    created_at: datetime


def steps_to_records(steps: tuple[TraceStep, ...]) -> list[dict]:
    return [s.to_record() for s in steps]


def trace_to_json(trace: AgentTrace) -> dict:
    return {
        "trace_id": trace.id,
        "question": trace.question,
        "route": trace.route.value,
        "final_answer": trace.final_answer,
        "pending_ids": list(trace.pending_ids),
        "created_at": isoformat(trace.created_at),
        "steps": steps_to_records(trace.steps),
    }
