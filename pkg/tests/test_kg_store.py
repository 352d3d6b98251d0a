from __future__ import annotations

import json
from decimal import Decimal

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kgqa.errors import DuplicateEntityId, IncompleteTriple, InvalidTriple, MalformedKg
from kgqa.kg.store import AddOutcome, KnowledgeGraph
from kgqa.kg.triples import Triple, parse_triple_line
from kgqa.kg.values import TypedValue, ValueKind, parse_value


def entity_line(eid, label, concepts=(), attributes=None):
    return json.dumps(
        {"type": "entity", "id": eid, "label": label, "concepts": list(concepts), "attributes": attributes or {}}
    )


def edge_line(s, p, o):
    return json.dumps({"type": "edge", "subject": s, "predicate": p, "object": o})


# --- typed values -------------------------------------------------------------


def test_quantity_renders_with_space_separated_unit():
    assert TypedValue.of_quantity(Decimal("100"), "km").render() == "100 km"
    assert TypedValue.of_quantity(Decimal("2161000")).render() == "2161000"
    assert TypedValue.of_quantity(Decimal("2.50")).render() == "2.5"


def test_typed_value_payload_must_match_kind():
    with pytest.raises(ValueError):
        TypedValue(kind=ValueKind.TEXT, text=None)
    with pytest.raises(ValueError):
        TypedValue(kind=ValueKind.QUANTITY, number=Decimal(1), unit=None)


def test_parse_value_typing_rules():
    assert parse_value("2161000", "population").kind is ValueKind.QUANTITY
    assert parse_value("-3.5", "delta").kind is ValueKind.QUANTITY
    # 4-digit integers become years only for date/year predicates
    assert parse_value("1867", "date_of_birth").kind is ValueKind.QUANTITY
    assert parse_value("1867", "birth_date").kind is ValueKind.YEAR
    assert parse_value("1867", "founding_year").kind is ValueKind.YEAR
    assert parse_value("0500", "birth_date").kind is ValueKind.QUANTITY
    assert parse_value("French", "official_language").kind is ValueKind.TEXT


# --- triples -------------------------------------------------------------------


def test_triple_render_and_parse_round_trip():
    t = Triple("France", "capital", None)
    assert t.render() == "(France; capital; ?)"
    assert parse_triple_line(t.render()) == t
    assert parse_triple_line("(France; capital; Paris)") == Triple("France", "capital", "Paris")


def test_triple_rejects_all_unknown_and_empty_slots():
    with pytest.raises(InvalidTriple):
        Triple(None, None, None)
    with pytest.raises(InvalidTriple):
        Triple("", "capital", "Paris")
    assert parse_triple_line("(; capital; Paris)") is None
    assert parse_triple_line("prose, not a triple") is None


def test_triple_trims_known_slots():
    assert Triple("  France ", "capital", None).subject == "France"


# --- loading -------------------------------------------------------------------


def test_load_counts_match_file(fixture_kg):
    assert fixture_kg.stats() == {"entities": 7, "edges": 5, "attributes": 5}


def test_load_two_entities_one_edge():
    data = "\n".join([entity_line("a", "A"), entity_line("b", "B"), edge_line("a", "rel", "b")])
    kg = KnowledgeGraph.load(data)
    assert kg.stats() == {"entities": 2, "edges": 1, "attributes": 0}


def test_load_rejects_dangling_edge():
    data = "\n".join([entity_line("a", "A"), edge_line("a", "rel", "missing")])
    with pytest.raises(MalformedKg):
        KnowledgeGraph.load(data)


def test_load_rejects_duplicate_entity_id():
    data = "\n".join([entity_line("a", "A"), entity_line("a", "A2")])
    with pytest.raises(DuplicateEntityId):
        KnowledgeGraph.load(data)


def test_load_reports_line_numbers():
    data = "\n".join([entity_line("a", "A"), "{broken"])
    with pytest.raises(MalformedKg) as exc:
        KnowledgeGraph.load(data)
    assert exc.value.line == 2


def test_fixture_match_capital(fixture_kg):
    hits = fixture_kg.match_triples(Triple("France", "capital", None))
    assert hits == [Triple("France", "capital", "Paris")]


# --- add_triple -----------------------------------------------------------------


def test_add_edge_between_existing_entities(fixture_kg):
    outcome = fixture_kg.add_triple(Triple("Marie Curie", "worked_in", "Paris"))
    assert outcome is AddOutcome.ADDED_EDGE
    assert Triple("Marie Curie", "worked_in", "Paris") in fixture_kg.match_triples(
        Triple("Marie Curie", None, None)
    )


def test_add_is_idempotent(fixture_kg):
    t = Triple("France", "capital", "Paris")
    before = fixture_kg.stats()
    assert fixture_kg.add_triple(t) is AddOutcome.ALREADY_PRESENT
    assert fixture_kg.stats() == before


def test_add_attribute_when_object_is_not_an_entity(fixture_kg):
    outcome = fixture_kg.add_triple(Triple("Warsaw", "population", "1793000"))
    assert outcome is AddOutcome.ADDED_ATTRIBUTE
    entity = fixture_kg.entities_by_label("Warsaw")[0]
    value = entity.attributes["population"][0]
    assert value.kind is ValueKind.QUANTITY
    assert value.render() == "1793000"


def test_add_creates_unknown_subject_with_generated_id(fixture_kg):
    fixture_kg.add_triple(Triple("Poland", "capital", "Warsaw"))
    created = fixture_kg.entities_by_label("Poland")
    assert len(created) == 1
    assert created[0].id.startswith("gen:")
    assert created[0].concepts == set()
    assert fixture_kg.match_triples(Triple("Poland", "capital", None)) == [
        Triple("Poland", "capital", "Warsaw")
    ]


def test_add_rejects_unknown_slots(fixture_kg):
    with pytest.raises(IncompleteTriple):
        fixture_kg.add_triple(Triple("France", "capital", None))


# --- remove_matching -------------------------------------------------------------


def test_remove_capital_edge(fixture_kg):
    assert fixture_kg.remove_matching(Triple("France", "capital", None)) == 1
    assert fixture_kg.match_triples(Triple("France", "capital", None)) == []
    # entities stay
    assert fixture_kg.entities_by_label("France")


def test_remove_nothing_is_a_noop(fixture_kg):
    before = fixture_kg.snapshot()
    assert fixture_kg.remove_matching(Triple("Atlantis", None, None)) == 0
    assert fixture_kg.snapshot() == before


def test_remove_all_predicate_matches(fixture_kg):
    fixture_kg.add_triple(Triple("Poland", "capital", "Warsaw"))
    assert fixture_kg.remove_matching(Triple(None, "capital", None)) == 3


def test_remove_attribute_values(fixture_kg):
    assert fixture_kg.remove_matching(Triple("Paris", "population", None)) == 1
    assert "population" not in fixture_kg.entities_by_label("Paris")[0].attributes


# --- match_triples ----------------------------------------------------------------


def test_match_all_facts_about_subject(fixture_kg):
    facts = fixture_kg.match_triples(Triple("France", None, None))
    assert facts == [
        Triple("France", "capital", "Paris"),
        Triple("France", "official_language", "French"),
    ]


def test_match_self(fixture_kg):
    t = Triple("Germany", "capital", "Berlin")
    assert fixture_kg.match_triples(t) == [t]


def test_match_absent_subject(fixture_kg):
    assert fixture_kg.match_triples(Triple("Atlantis", None, None)) == []


# --- snapshot / restore -------------------------------------------------------------


def test_snapshot_round_trip_empty():
    kg = KnowledgeGraph()
    assert KnowledgeGraph.load(kg.snapshot()).stats() == kg.stats()


def test_snapshot_round_trip_fixture(fixture_kg):
    restored = KnowledgeGraph.load(fixture_kg.snapshot())
    assert restored.snapshot() == fixture_kg.snapshot()


def test_restore_rejects_truncated_stream(fixture_kg):
    data = fixture_kg.snapshot()[:-20]
    with pytest.raises(MalformedKg):
        KnowledgeGraph.load(data)


def test_generated_ids_do_not_collide_after_restore(fixture_kg):
    fixture_kg.add_triple(Triple("Poland", "capital", "Warsaw"))
    restored = KnowledgeGraph.load(fixture_kg.snapshot())
    restored.add_triple(Triple("Italy", "borders", "France"))
    ids = [e.id for e in restored.entities.values() if e.id.startswith("gen:")]
    assert len(ids) == len(set(ids)) == 2


# --- property tests -------------------------------------------------------------------

_labels = st.sampled_from(["a", "b", "paris", "rome", "x y"])
_predicates = st.sampled_from(["capital", "likes", "near"])
_objects = st.sampled_from(["a", "b", "rome", "42", "1867"])


@st.composite
def small_kg_and_triples(draw):
    kg = KnowledgeGraph.load(
        "\n".join(entity_line(f"e{i}", draw(_labels)) for i in range(draw(st.integers(1, 5))))
    )
    triples = draw(
        st.lists(
            st.builds(Triple, _labels, _predicates, _objects),
            min_size=1,
            max_size=6,
        )
    )
    return kg, triples


@settings(max_examples=60, deadline=None)
@given(small_kg_and_triples())
def test_add_then_match_then_remove_duality(case):
    kg, triples = case
    for t in triples:
        kg.add_triple(t)
        assert t in kg.match_triples(t)  # add/match duality
    pattern = Triple(triples[0].subject, None, None)
    kg.remove_matching(pattern)
    assert kg.match_triples(pattern) == []  # remove/match duality


@settings(max_examples=60, deadline=None)
@given(small_kg_and_triples())
def test_unification_soundness_and_index_coherence(case):
    kg, triples = case
    for t in triples:
        kg.add_triple(t)
    pattern = Triple(None, triples[-1].predicate, None)
    for match in kg.match_triples(pattern):
        assert match.predicate == pattern.predicate
        assert match.is_complete
    # label index rebuilds to the same content after arbitrary mutations
    rebuilt: dict[str, set[str]] = {}
    for eid, entity in kg.entities.items():
        rebuilt.setdefault(entity.label, set()).add(eid)
    assert rebuilt == kg.label_index
    # persistence: restore(snapshot(kg)) preserves content
    assert KnowledgeGraph.load(kg.snapshot()).snapshot() == kg.snapshot()
