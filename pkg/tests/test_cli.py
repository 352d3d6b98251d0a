from __future__ import annotations

import json

import pytest

from kgqa.cli import main
from kgqa.config import fixture_path
from kgqa.kg.store import KnowledgeGraph
from kgqa.kg.triples import Triple

HIT = "What is the capital of France?"


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ask_prints_answer(capsys):
    code, out, _ = run(capsys, "ask", HIT, "--kg", "fixture", "--script", "demo")
    assert code == 0
    assert "Paris" in out


def test_ask_trace_rendering(capsys):
    code, out, _ = run(capsys, "ask", HIT, "--kg", "fixture", "--script", "demo", "--trace")
    assert code == 0
    assert "Thought:" in out
    assert "Action[query_kg]:" in out
    assert "Observation: Paris" in out
    assert "(route: kg_hit)" in out


def test_ask_records_format_matches_api_schema(capsys):
    code, out, _ = run(
        capsys, "ask", HIT, "--kg", "fixture", "--script", "demo", "--format", "records"
    )
    assert code == 0
    record = json.loads(out)
    assert set(record) == {
        "trace_id",
        "question",
        "route",
        "final_answer",
        "pending_ids",
        "created_at",
        "steps",
    }


def test_eval_run_all(capsys):
    code, out, _ = run(
        capsys,
        "eval",
        "run",
        "--mode",
        "all",
        "--fixture",
        "synthetic20",
        "--kg",
        "fixture",
        "--script",
        "demo",
    )
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert lines[0].startswith("Method")
    assert lines[3].endswith("100%")


def test_kg_load_missing_file(capsys):
    code, out, err = run(capsys, "kg", "load", "missing.file")
    assert code == 1
    assert "error:" in err


def test_kg_load_and_stats(capsys, tmp_path):
    code, out, _ = run(capsys, "kg", "load", str(fixture_path("kg", "fixture")))
    assert code == 0
    assert "7 entities" in out
    code, out, _ = run(capsys, "kg", "stats", "--kg", "fixture", "--format", "records")
    assert json.loads(out) == {"entities": 7, "edges": 5, "attributes": 5}


def test_kg_add_and_export_round_trip(capsys, tmp_path):
    target = tmp_path / "kg.jsonl"
    target.write_bytes(fixture_path("kg", "fixture").read_bytes())
    code, out, _ = run(capsys, "kg", "add", "(Poland; capital; Warsaw)", "--kg", str(target))
    assert code == 0
    assert "added_edge" in out
    kg = KnowledgeGraph.load(target.read_bytes())
    assert kg.match_triples(Triple("Poland", "capital", None)) == [
        Triple("Poland", "capital", "Warsaw")
    ]
    exported = tmp_path / "out.jsonl"
    code, _, _ = run(capsys, "kg", "export", "--kg", str(target), "--out", str(exported))
    assert code == 0
    assert exported.read_bytes() == kg.snapshot()


def test_kg_add_refuses_packaged_fixture(capsys):
    code, _, err = run(capsys, "kg", "add", "(a; b; c)", "--kg", "fixture")
    assert code == 1
    assert "packaged fixture" in err


def test_corpus_ingest_and_index(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", "ingest", "--corpus", "fixture", "--format", "records")
    assert code == 0
    payload = json.loads(out)
    assert payload["documents"] == 8
    cache = tmp_path / "corpus.idx"
    code, out, _ = run(capsys, "corpus", "index", "--corpus", "fixture", "--cache", str(cache))
    assert code == 0
    assert cache.exists()


def test_queue_cycle_via_cli(capsys, tmp_path):
    log = str(tmp_path / "events.jsonl")
    kg_file = tmp_path / "kg.jsonl"
    kg = KnowledgeGraph.load(fixture_path("kg", "fixture").read_bytes())
    kg.remove_matching(Triple("France", "capital", None))
    kg_file.write_bytes(kg.snapshot())
    base = ["--kg", str(kg_file), "--corpus", "fixture", "--script", "demo", "--log", log]

    code, out, _ = run(capsys, "ask", HIT, *base)
    assert code == 0

    code, out, _ = run(capsys, "queue", "list", *base, "--format", "records")
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 1
    rid = records[0]["id"]
    assert records[0]["status"] == "pending"

    code, out, _ = run(capsys, "queue", "verify", rid, *base)
    assert code == 0
    assert "evidence" in out

    code, out, _ = run(capsys, "queue", "accept", rid, *base)
    assert code == 0
    assert "added_edge" in out

    # the accepted edge was persisted back into the kg file
    code, out, _ = run(capsys, "ask", HIT, *base, "--trace")
    assert "(route: kg_hit)" in out

    code, _, err = run(capsys, "queue", "accept", rid, *base)
    assert code == 1
    assert "accepted" in err


def test_queue_edit_and_reject(capsys, tmp_path):
    log = str(tmp_path / "events.jsonl")
    kg_file = tmp_path / "kg.jsonl"
    kg = KnowledgeGraph.load(fixture_path("kg", "fixture").read_bytes())
    kg.remove_matching(Triple("France", "capital", None))
    kg_file.write_bytes(kg.snapshot())
    base = ["--kg", str(kg_file), "--script", "demo", "--log", log]
    run(capsys, "ask", HIT, *base)
    code, out, _ = run(capsys, "queue", "list", *base, "--format", "records")
    rid = json.loads(out.splitlines()[0])["id"]

    code, _, err = run(capsys, "queue", "edit", rid, "--triples", "(France; capital; ?)", *base)
    assert code == 1  # unknown slot refused

    code, out, _ = run(capsys, "queue", "edit", rid, "--triples", "(France; capital; Paris)", *base)
    assert code == 0

    code, out, _ = run(capsys, "queue", "reject", rid, *base)
    assert code == 0
    code, out, _ = run(capsys, "queue", "list", *base, "--status", "rejected", "--format", "records")
    assert json.loads(out.splitlines()[0])["id"] == rid


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ask", HIT, "--no-such-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_eval_records_format(capsys):
    code, out, _ = run(
        capsys,
        "eval",
        "run",
        "--mode",
        "updated",
        "--fixture",
        "synthetic20",
        "--kg",
        "fixture",
        "--script",
        "demo",
        "--format",
        "records",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    summary = [l for l in lines if l["type"] == "summary"]
    assert summary == [
        {"type": "summary", "mode": "updated", "n": 20, "correct": 20, "accuracy": 1.0}
    ]
