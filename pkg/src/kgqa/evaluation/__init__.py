"""Three-scenario evaluation: direct answer, missing knowledge, updated graph."""

from kgqa.evaluation.harness import (
    EvalItem,
    ScenarioMode,
    ScenarioReport,
    emit_report,
    load_items,
    parse_report_records,
    run_scenario,
)

__all__ = [
    "EvalItem",
    "ScenarioMode",
    "ScenarioReport",
    "emit_report",
    "load_items",
    "parse_report_records",
    "run_scenario",
]
