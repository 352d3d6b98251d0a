from __future__ import annotations

import pytest

from kgqa.clock import TickClock
from kgqa.config import Config, fixture_path
from kgqa.engine import Engine
from kgqa.kg.store import KnowledgeGraph
from kgqa.llm.gateway import Gateway
from kgqa.llm.scripted import load_script

_acceptance_results: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.get_closest_marker("acceptance"):
        _acceptance_results.append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def fixture_kg() -> KnowledgeGraph:
    return KnowledgeGraph.load(fixture_path("kg", "fixture").read_bytes())


@pytest.fixture
def demo_gateway() -> Gateway:
    return Gateway(load_script(fixture_path("script", "demo").read_bytes()))


@pytest.fixture
def engine_factory(tmp_path):
    """Engines on the packaged fixtures with a deterministic clock."""

    counter = iter(range(1000))

    def make(event_log: str | None = None, corpus: bool = True) -> Engine:
        log = event_log or str(tmp_path / f"events-{next(counter)}.jsonl")
        cfg = Config(
            kg="fixture",
            corpus="fixture" if corpus else None,
            script="demo",
            event_log=log,
        )
        return Engine.from_config(cfg, clock=TickClock())

    return make
