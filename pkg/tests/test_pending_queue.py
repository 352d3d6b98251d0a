from __future__ import annotations

import random

import pytest

from kgqa.clock import TickClock
from kgqa.errors import (
    EmptyRecord,
    IllegalTransition,
    IncompleteTriple,
    LlmFailure,
    NoEvidence,
    SlotMismatch,
    TerminalState,
    UnknownId,
    UnknownStatus,
)
from kgqa.config import fixture_path
from kgqa.kg.store import KnowledgeGraph
from kgqa.kg.triples import Triple
from kgqa.llm.gateway import Gateway
from kgqa.llm.roles import LlmRole
from kgqa.llm.scripted import ScriptedBackend
from kgqa.pending.eventlog import EventLog
from kgqa.pending.records import PendingStatus, QueueAction, record_to_json
from kgqa.pending.store import KnowledgeQueue
from kgqa.retrieval.bm25 import build_index
from kgqa.retrieval.corpus import chunk_corpus, load_corpus

INCOMPLETE = [Triple("France", "capital", None)]
COMPLETED = [Triple("France", "capital", "Paris")]
QUESTION = "What is the capital of France?"


def make_queue(tmp_path=None, name="events.jsonl") -> KnowledgeQueue:
    log = EventLog(tmp_path / name) if tmp_path is not None else EventLog()
    return KnowledgeQueue(log, clock=TickClock())


def fixture_index():
    docs = load_corpus(fixture_path("corpus", "fixture").read_bytes())
    return build_index(chunk_corpus(docs))


def confirming_gateway() -> Gateway:
    backend = ScriptedBackend()
    backend.add_pattern(LlmRole.RAG_VERIFICATION, "France", "(France; capital; Paris)")
    return Gateway(backend)


# --- enqueue -------------------------------------------------------------------


def test_enqueue_and_get():
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    record = queue.get(rid)
    assert record.status is PendingStatus.PENDING
    assert record.incomplete == INCOMPLETE
    assert record.completed == COMPLETED
    assert [h.action for h in record.history] == ["enqueue"]


def test_enqueue_validation():
    queue = make_queue()
    with pytest.raises(EmptyRecord):
        queue.enqueue(QUESTION, [], [])
    with pytest.raises(SlotMismatch):
        queue.enqueue(QUESTION, INCOMPLETE, COMPLETED + COMPLETED)
    with pytest.raises(SlotMismatch):
        queue.enqueue(QUESTION, INCOMPLETE, [Triple("France", "located_in", "Paris")])
    with pytest.raises(SlotMismatch):
        queue.enqueue(QUESTION, [Triple("France", "capital", "Paris")], COMPLETED)


def test_enqueue_survives_restart(tmp_path):
    queue = make_queue(tmp_path)
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    reopened = KnowledgeQueue(EventLog(tmp_path / "events.jsonl"), clock=TickClock())
    assert [r.id for r in reopened.list()] == [rid]
    assert record_to_json(reopened.get(rid)) == record_to_json(queue.get(rid))


# --- verify ---------------------------------------------------------------------


def test_verify_stores_evidence_and_corrections():
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    record = queue.verify(rid, fixture_index(), confirming_gateway())
    assert record.status is PendingStatus.VERIFIED
    assert record.corrected == COMPLETED
    assert 0 < len(record.evidence) <= 10
    assert "the capital of france is paris" in record.evidence[0].text
    scores = [e.score for e in record.evidence]
    assert scores == sorted(scores, reverse=True)


def test_verify_keeps_contradicting_correction_alongside_completion():
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, [Triple("France", "capital", "Lyon")])
    record = queue.verify(rid, fixture_index(), confirming_gateway())
    assert record.completed == [Triple("France", "capital", "Lyon")]
    assert record.corrected == [Triple("France", "capital", "Paris")]


def test_verify_without_evidence_is_refused():
    queue = make_queue()
    rid = queue.enqueue("zzz?", [Triple("zzz", "qqq", None)], [Triple("zzz", "qqq", "www")])
    empty_index = build_index([])
    with pytest.raises(NoEvidence):
        queue.verify(rid, empty_index, confirming_gateway())
    assert queue.get(rid).status is PendingStatus.PENDING
    assert queue.get(rid).evidence == []


def test_verify_llm_failure_leaves_record_untouched():
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    bad_gateway = Gateway(ScriptedBackend())  # no entries -> NoScriptedResponse
    with pytest.raises(LlmFailure):
        queue.verify(rid, fixture_index(), bad_gateway)
    assert queue.get(rid).status is PendingStatus.PENDING


# --- accept / edit / reject -------------------------------------------------------


def test_accept_pending_integrates_completions(fixture_kg):
    fixture_kg.remove_matching(Triple("France", "capital", None))
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    outcomes = queue.accept(rid, fixture_kg)
    assert outcomes == ["added_edge"]
    assert fixture_kg.match_triples(Triple("France", "capital", None)) == [
        Triple("France", "capital", "Paris")
    ]
    assert queue.get(rid).status is PendingStatus.ACCEPTED


def test_accept_prefers_corrected_over_completed(fixture_kg):
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, [Triple("France", "capital", "Lyon")])
    queue.verify(rid, fixture_index(), confirming_gateway())
    queue.accept(rid, fixture_kg)
    # the corrected Paris edge is ensured; the wrong Lyon fact never lands
    assert fixture_kg.match_triples(Triple("France", "capital", None)) == [
        Triple("France", "capital", "Paris")
    ]


def test_accept_precedence_corrected_over_edited_over_completed(fixture_kg):
    # completed only
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    queue.accept(rid, fixture_kg)
    assert queue.get(rid).outcomes == ["already_present"]
    # edited wins over completed
    rid = queue.enqueue(QUESTION, INCOMPLETE, [Triple("France", "capital", "Lyon")])
    queue.edit(rid, COMPLETED)
    queue.accept(rid, fixture_kg)
    assert queue.get(rid).outcomes == ["already_present"]
    # corrected wins even over a later edit
    rid = queue.enqueue(QUESTION, INCOMPLETE, [Triple("France", "capital", "Lyon")])
    queue.verify(rid, fixture_index(), confirming_gateway())
    queue.edit(rid, [Triple("France", "capital", "Marseille")])
    queue.accept(rid, fixture_kg)
    assert fixture_kg.match_triples(Triple("France", "capital", "Marseille")) == []
    assert queue.get(rid).outcomes == ["already_present"]


def test_accept_terminal_twice(fixture_kg):
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    queue.accept(rid, fixture_kg)
    with pytest.raises(TerminalState):
        queue.accept(rid, fixture_kg)


def test_edit_then_accept_uses_edited_payload(fixture_kg):
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, [Triple("France", "capital", "Lyon")])
    queue.edit(rid, COMPLETED)
    assert queue.get(rid).status is PendingStatus.EDITED
    queue.accept(rid, fixture_kg)
    assert queue.get(rid).outcomes == ["already_present"]


def test_edit_rejects_unknown_slots():
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    with pytest.raises(IncompleteTriple):
        queue.edit(rid, [Triple("France", "capital", None)])


def test_reject_then_accept_fails():
    queue = make_queue()
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    queue.reject(rid)
    with pytest.raises(TerminalState):
        queue.accept(rid, KnowledgeGraph())


def test_list_filters_and_orders():
    queue = make_queue()
    first = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    second = queue.enqueue("Another?", [Triple("A", "p", None)], [Triple("A", "p", "b")])
    queue.reject(second)
    assert [r.id for r in queue.list()] == [second, first]  # newest first
    assert [r.id for r in queue.list("pending")] == [first]
    assert [r.id for r in queue.list("rejected")] == [second]
    with pytest.raises(UnknownStatus):
        queue.list("nonsense")
    with pytest.raises(UnknownId):
        queue.get("pr:9999")


# --- state machine ---------------------------------------------------------------


LEGAL = {
    PendingStatus.PENDING: {QueueAction.VERIFY, QueueAction.EDIT, QueueAction.ACCEPT, QueueAction.REJECT},
    PendingStatus.VERIFIED: {QueueAction.EDIT, QueueAction.ACCEPT, QueueAction.REJECT},
    PendingStatus.EDITED: {QueueAction.ACCEPT, QueueAction.REJECT},
    PendingStatus.ACCEPTED: set(),
    PendingStatus.REJECTED: set(),
}


def drive_to(queue: KnowledgeQueue, status: PendingStatus, kg: KnowledgeGraph) -> str:
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    if status is PendingStatus.VERIFIED:
        queue.verify(rid, fixture_index(), confirming_gateway())
    elif status is PendingStatus.EDITED:
        queue.edit(rid, COMPLETED)
    elif status is PendingStatus.ACCEPTED:
        queue.accept(rid, kg)
    elif status is PendingStatus.REJECTED:
        queue.reject(rid)
    return rid


def apply_action(queue, rid, action, kg):
    if action is QueueAction.VERIFY:
        queue.verify(rid, fixture_index(), confirming_gateway())
    elif action is QueueAction.EDIT:
        queue.edit(rid, COMPLETED)
    elif action is QueueAction.ACCEPT:
        queue.accept(rid, kg)
    else:
        queue.reject(rid)


@pytest.mark.parametrize("status", list(PendingStatus))
@pytest.mark.parametrize("action", list(QueueAction))
def test_state_machine_matrix(status, action, fixture_kg):
    queue = make_queue()
    rid = drive_to(queue, status, fixture_kg)
    assert queue.get(rid).status is status
    if action in LEGAL[status]:
        apply_action(queue, rid, action, fixture_kg)
    else:
        with pytest.raises(IllegalTransition):
            apply_action(queue, rid, action, fixture_kg)
        assert queue.get(rid).status is status


# --- durability --------------------------------------------------------------------


def test_replay_after_random_legal_actions(tmp_path, fixture_kg):
    rng = random.Random(5)
    queue = make_queue(tmp_path)
    index = fixture_index()
    gateway = confirming_gateway()
    ids: list[str] = []
    for _ in range(300):
        if not ids or rng.random() < 0.3:
            ids.append(queue.enqueue(QUESTION, INCOMPLETE, COMPLETED))
            continue
        rid = rng.choice(ids)
        action = rng.choice(list(QueueAction))
        if action not in LEGAL[queue.get(rid).status]:
            continue
        apply_action(queue, rid, action, fixture_kg)

    replayed = KnowledgeQueue(EventLog(tmp_path / "events.jsonl"), clock=TickClock())
    assert [record_to_json(r) for r in replayed.list()] == [record_to_json(r) for r in queue.list()]


def test_replay_does_not_touch_the_graph(tmp_path, fixture_kg):
    queue = make_queue(tmp_path)
    rid = queue.enqueue(QUESTION, INCOMPLETE, COMPLETED)
    queue.accept(rid, fixture_kg)
    before = fixture_kg.snapshot()
    KnowledgeQueue(EventLog(tmp_path / "events.jsonl"), clock=TickClock())
    assert fixture_kg.snapshot() == before
