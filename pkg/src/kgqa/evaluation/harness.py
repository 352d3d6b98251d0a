"""Desk-scale reproduction of the three QA scenarios.

Each item runs against a scratch copy of the graph, so the persistent graph
is untouched. Correctness is case-insensitive containment of the gold answer
in the final answer — an automatable stand-in for manual judging, stated in
every report footer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import IO

from kgqa.agent.orchestrator import AgentDeps, answer_question, direct_answer
from kgqa.clock import Clock, SystemClock
from kgqa.errors import FixtureError, InvalidTriple, KgqaError
from kgqa.kg.store import KnowledgeGraph
from kgqa.kg.triples import Triple
from kgqa.llm.gateway import Gateway
from kgqa.pending.eventlog import EventLog
from kgqa.pending.store import KnowledgeQueue


class ScenarioMode(str, Enum):
    DIRECT = "direct"
    WITHOUT_KNOWLEDGE = "without_knowledge"
    UPDATED = "updated"


MODE_LABELS: dict[ScenarioMode, str] = {
    ScenarioMode.DIRECT: "Direct Answer",
    ScenarioMode.WITHOUT_KNOWLEDGE: "Without Knowledge",
    ScenarioMode.UPDATED: "Updated KG",
}

FOOTER = "Correctness: case-insensitive containment of the gold answer in the final answer."


@dataclass(frozen=True)
class EvalItem:
    question: str
    gold_answer: str
    gold_triples: tuple[Triple, ...]


@dataclass(frozen=True)
class ScenarioReport:
    mode: ScenarioMode
    n: int
    correct: int
    accuracy: float
    per_item: tuple[dict, ...]


def load_items(source: bytes | str | IO[bytes]) -> list[EvalItem]:
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read().decode("utf-8")

    items: list[EvalItem] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            question = str(record["question"]).strip()
            gold_answer = str(record["gold_answer"]).strip()
            triples = tuple(Triple.from_json(t) for t in record["gold_triples"])
        except (json.JSONDecodeError, KeyError, TypeError, InvalidTriple) as exc:
            raise FixtureError(f"eval fixture line {lineno}: {exc}") from exc
        if not question or not gold_answer or not triples:
            raise FixtureError(f"eval fixture line {lineno}: empty field")
        for t in triples:
            if not t.is_complete:
                raise FixtureError(f"eval fixture line {lineno}: gold triple has unknown slots")
        items.append(EvalItem(question=question, gold_answer=gold_answer, gold_triples=triples))
    return items


def _is_correct(gold: str, answer: str) -> bool:
    return gold.lower() in answer.lower()


def run_scenario(
    items: list[EvalItem],
    mode: ScenarioMode,
    kg: KnowledgeGraph,
    gateway: Gateway,
    clock: Clock | None = None,
) -> ScenarioReport:
    """Run every item under one scenario against scratch copies of `kg`."""
    clock = clock or SystemClock()
    base_snapshot = kg.snapshot()
    per_item: list[dict] = []
    correct = 0

    for item in items:
        entry: dict = {"question": item.question, "answer": "", "route": None, "correct": False}
        try:
            if mode is ScenarioMode.DIRECT:
                deps = AgentDeps(kg=KnowledgeGraph.load(base_snapshot), gateway=gateway, clock=clock)
                trace = direct_answer(item.question, deps)
            else:
                scratch = KnowledgeGraph.load(base_snapshot)
                if mode is ScenarioMode.WITHOUT_KNOWLEDGE:
                    for t in item.gold_triples:
                        scratch.remove_matching(t)
                else:
                    for t in item.gold_triples:
                        scratch.add_triple(t)
                deps = AgentDeps(
                    kg=scratch,
                    gateway=gateway,
                    queue=KnowledgeQueue(EventLog(), clock=clock),
                    clock=clock,
                )
                trace = answer_question(item.question, deps)
            entry["answer"] = trace.final_answer
            entry["route"] = trace.route.value
            entry["correct"] = _is_correct(item.gold_answer, trace.final_answer)
        except KgqaError as exc:
            entry["error"] = str(exc)
        if entry["correct"]:
            correct += 1
        per_item.append(entry)

    n = len(items)
    return ScenarioReport(
        mode=mode,
        n=n,
        correct=correct,
        accuracy=(correct / n) if n else 0.0,
        per_item=tuple(per_item),
    )


def _percent(accuracy: float) -> str:
    return f"{round(accuracy * 100)}%"


def emit_report(reports: list[ScenarioReport], fmt: str = "table") -> bytes:
    """Render reports as the comparison table or as line-delimited records."""
    if fmt == "table":
        width = max(len(MODE_LABELS[r.mode]) for r in reports) if reports else 6
        lines = [f"{'Method'.ljust(width)}  Accuracy"]
        for report in reports:
            lines.append(f"{MODE_LABELS[report.mode].ljust(width)}  {_percent(report.accuracy)}")
        lines.append("")
        lines.append(FOOTER)
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "records":
        lines = []
        for report in reports:
            for item in report.per_item:
                lines.append(json.dumps({"type": "item", "mode": report.mode.value, **item}, ensure_ascii=False))
            lines.append(
                json.dumps(
                    {
                        "type": "summary",
                        "mode": report.mode.value,
                        "n": report.n,
                        "correct": report.correct,
                        "accuracy": report.accuracy,
                    },
                    ensure_ascii=False,
                )
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")


def parse_report_records(data: bytes) -> list[ScenarioReport]:
    """Rebuild reports from the record stream (round-trip of emit_report)."""
    by_mode: dict[str, list[dict]] = {}
    summaries: dict[str, dict] = {}
    order: list[str] = []
    for line in data.decode("utf-8").splitlines():
        if not line.strip():
            continue
        record = json.loads(line)
        mode = record["mode"]
        if record.get("type") == "summary":
            summaries[mode] = record
            if mode not in order:
                order.append(mode)
        else:
            item = {k: v for k, v in record.items() if k not in ("type", "mode")}
            by_mode.setdefault(mode, []).append(item)
            if mode not in order:
                order.append(mode)
    reports = []
    for mode in order:
        summary = summaries[mode]
        reports.append(
            ScenarioReport(
                mode=ScenarioMode(mode),
                n=summary["n"],
                correct=summary["correct"],
                accuracy=summary["accuracy"],
                per_item=tuple(by_mode.get(mode, [])),
            )
        )
    return reports
