"""Two-route agent: answer from the graph when it can, otherwise make the
missing knowledge explicit, complete it from the model, and queue it.

Route selection is behavioral: the graph is always queried first, and the
literal observation "Failed" is the only thing that sends a run down the
completion route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from kgqa.clock import Clock, SystemClock
from kgqa.errors import (
    AgentLoopExceeded,
    GatewayError,
    InvalidTriple,
    LlmFailure,
    MalformedOutput,
    ParseError,
    SlotMismatch,
    UnknownTool,
)
from kgqa.agent.trace import AgentTrace, Route, TraceStep
from kgqa.kg.store import KnowledgeGraph
from kgqa.kopl.executor import FAILED_TEXT, execute
from kgqa.kopl.parser import parse_program
from kgqa.llm.gateway import Gateway
from kgqa.llm.output_parsers import parse_completions, parse_decomposition_steps, parse_triples
from kgqa.llm.roles import LlmRole

MAX_ACTIONS = 8

TOOLS: dict[str, str] = {
    "query_kg": (
        "Translate decomposed retrieval steps into a formal query, execute it "
        "against the knowledge graph, and return the answer or Failed."
    ),
    "complete_knowledge": (
        "Fill the unknown slots of incomplete triples from model knowledge; "
        "input is the question on the first line, then one triple per line."
    ),
}


def _default_ids() -> Callable[[], str]:
    counter = itertools.count(1)
    return lambda: f"tr:{next(counter):04d}"


@dataclass
class AgentDeps:
    """Everything a run needs; the agent itself holds no state."""

    kg: KnowledgeGraph
    gateway: Gateway
    queue: "object" = None  # KnowledgeQueue; untyped to keep this module leaf-light
    clock: Clock = field(default_factory=SystemClock)
    next_trace_id: Callable[[], str] = field(default_factory=_default_ids)


def run_tool(name: str, tool_input: str, deps: AgentDeps) -> str:
    """Run one registered tool and render its observation.

    Query execution problems normalize to "Failed"; completion problems are
    retried once with feedback and then rendered as "Error: <reason>".
    Backend transport errors propagate so callers can distinguish them.
    """
    if name not in TOOLS:
        raise UnknownTool(f"unknown tool: {name!r}")

    if name == "query_kg":
        program_text = deps.gateway.call(LlmRole.FORMAL_QUERY_GENERATION, steps=tool_input)
        try:
            program = parse_program(program_text)
        except ParseError:
            return FAILED_TEXT
        return execute(program, deps.kg).render()

    # complete_knowledge
    lines = tool_input.splitlines()
    question = lines[0].strip() if lines else ""
    try:
        incomplete = parse_triples("\n".join(lines[1:]))
    except (MalformedOutput, InvalidTriple) as exc:
        return f"Error: {exc}"

    triples_text = "\n".join(t.render() for t in incomplete)
    feedback = ""
    last_error: Exception | None = None
    for _attempt in range(2):  # one retry on malformed/mismatched completion
        response = deps.gateway.call(
            LlmRole.KNOWLEDGE_COMPLETION,
            question=question,
            triples=triples_text,
            feedback=feedback,
        )
        try:
            completed = parse_completions(response, incomplete)
            return "\n".join(t.render() for t in completed)
        except (MalformedOutput, SlotMismatch, InvalidTriple) as exc:
            last_error = exc
            feedback = (
                f"\nYour previous output was rejected ({exc}); echo exactly one completed "
                "triple per line in the given order."
            )
    return f"Error: {last_error}"


def answer_question(question: str, deps: AgentDeps) -> AgentTrace:
    """Run the full two-route loop for one question and return its trace.

    The run reads the graph but never writes it; the only side effect is one
    pending record enqueued on the miss route.
    """
    question = question.strip()
    if not question:
        raise ValueError("question must be non-empty")

    steps: list[TraceStep] = []
    actions = 0

    def act(tool: str, tool_input: str) -> str:
        nonlocal actions
        actions += 1
        if actions > MAX_ACTIONS:
            raise AgentLoopExceeded(f"more than {MAX_ACTIONS} tool actions")
        steps.append(TraceStep.action(tool, tool_input))
        observation = run_tool(tool, tool_input, deps)
        steps.append(TraceStep.observation(observation))
        if observation.startswith("Error: "):
            raise LlmFailure(observation, steps=tuple(steps))
        return observation

    try:
        decomposition = deps.gateway.call(LlmRole.QUESTION_DECOMPOSITION, question=question)
        step_lines = parse_decomposition_steps(decomposition)
        steps_text = "\n".join(f"{i}. {line}" for i, line in enumerate(step_lines, start=1))
        steps.append(TraceStep.thought("Decompose the question into retrieval steps:\n" + steps_text))

        observation = act("query_kg", steps_text)

        if observation != FAILED_TEXT:
            steps.append(TraceStep.thought("The knowledge graph answered; composing the final response."))
            final = deps.gateway.call(LlmRole.ANSWER_INTEGRATION, question=question, facts=observation)
            steps.append(TraceStep.final(final))
            return AgentTrace(
                id=deps.next_trace_id(),
                question=question,
                steps=tuple(steps),
                route=Route.KG_HIT,
                final_answer=final,
                pending_ids=(),
                created_at=deps.clock.now(),
            )

        # miss route: make the gap explicit, complete it, answer, enqueue
        gap_text = deps.gateway.call(
            LlmRole.KNOWLEDGE_DECOMPOSITION, question=question, steps=steps_text
        )
        incomplete = parse_triples(gap_text)
        incomplete_text = "\n".join(t.render() for t in incomplete)
        steps.append(TraceStep.thought("The graph query failed; the missing facts are:\n" + incomplete_text))

        completion_obs = act("complete_knowledge", question + "\n" + incomplete_text)
        completed = parse_triples(completion_obs)
        facts = " ".join(t.render() for t in completed)

        final = deps.gateway.call(LlmRole.ANSWER_INTEGRATION, question=question, facts=facts)
        pending_id = deps.queue.enqueue(question, incomplete, completed)  # type: ignore[union-attr]
        steps.append(TraceStep.thought("Answering from model-completed facts; queueing them for review."))
        steps.append(TraceStep.final(final))
        return AgentTrace(
            id=deps.next_trace_id(),
            question=question,
            steps=tuple(steps),
            route=Route.KG_MISS,
            final_answer=final,
            pending_ids=(pending_id,),
            created_at=deps.clock.now(),
        )
    except LlmFailure:
        raise
    except (GatewayError, MalformedOutput, InvalidTriple, SlotMismatch) as exc:
        raise LlmFailure(str(exc), steps=tuple(steps), cause=exc) from exc


def direct_answer(question: str, deps: AgentDeps) -> AgentTrace:
    """Answer from model knowledge alone: no graph, no queue side effects."""
    question = question.strip()
    if not question:
        raise ValueError("question must be non-empty")
    steps = [TraceStep.thought("Answering directly from model knowledge.")]
    try:
        final = deps.gateway.call(LlmRole.DIRECT_ANSWER, question=question)
    except GatewayError as exc:
        raise LlmFailure(str(exc), steps=tuple(steps), cause=exc) from exc
    steps.append(TraceStep.final(final))
    return AgentTrace(
        id=deps.next_trace_id(),
        question=question,
        steps=tuple(steps),
        route=Route.DIRECT_ONLY,
        final_answer=final,
        pending_ids=(),
        created_at=deps.clock.now(),
    )
