"""Thought-Action-Observation agent over the graph, model, and review queue."""

from kgqa.agent.orchestrator import (
    TOOLS,
    AgentDeps,
    answer_question,
    direct_answer,
    run_tool,
)
from kgqa.agent.trace import AgentTrace, Route, TraceStep, trace_to_json

__all__ = [
    "TOOLS",
    "AgentDeps",
    "AgentTrace",
    "Route",
    "TraceStep",
    "answer_question",
    "direct_answer",
    "run_tool",
    "trace_to_json",
]
