"""Knowledge graph storage: load, mutate, match, snapshot.

File format: UTF-8 lines, one JSON record each, "type" is "entity" or "edge".
Entities carry label, concepts, and typed attributes; edges reference entity
ids and must resolve. Snapshots use the same format in canonical order, so
restore(snapshot(kg)) reproduces the graph exactly.
"""

from __future__ import annotations

import io
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import IO

from kgqa.concurrency import RWLock
from kgqa.errors import DuplicateEntityId, IncompleteTriple, MalformedKg
from kgqa.kg.triples import Triple
from kgqa.kg.values import TypedValue, parse_value

_GEN_ID = re.compile(r"^gen:(\d+)$")


@dataclass
class Entity:
    id: str
    label: str
    concepts: set[str] = field(default_factory=set)
    attributes: dict[str, list[TypedValue]] = field(default_factory=dict)


@dataclass(frozen=True)
class RelationEdge:
    subject: str
    predicate: str
    object: str


class AddOutcome(str, Enum):
    ADDED_EDGE = "added_edge"
    ADDED_ATTRIBUTE = "added_attribute"
    ALREADY_PRESENT = "already_present"


class KnowledgeGraph:
    """Entities with concepts/attributes plus labeled relation edges.

    Safe to share between threads: reads run concurrently, mutations are
    exclusive. Labels are matched exactly after trimming outer whitespace.
    """

    def __init__(self):
        self.entities: dict[str, Entity] = {}
        self.edges: set[RelationEdge] = set()
        self.label_index: dict[str, set[str]] = {}
        self._lock = RWLock()
        self._gen_counter = 0

    # --- construction ---------------------------------------------------

    @classmethod
    def load(cls, source: bytes | str | IO[bytes]) -> "KnowledgeGraph":
        if isinstance(source, bytes):
            text = source.decode("utf-8")
        elif isinstance(source, str):
            text = source
        else:
            text = source.read().decode("utf-8")

        kg = cls()
        edge_records: list[tuple[int, dict]] = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedKg(lineno, f"invalid record: {exc.msg}") from exc
            if not isinstance(record, dict):
                raise MalformedKg(lineno, "record is not an object")
            rtype = record.get("type")
            if rtype == "entity":
                kg._load_entity(lineno, record)
            elif rtype == "edge":
                edge_records.append((lineno, record))
            else:
                raise MalformedKg(lineno, f"unknown record type: {rtype!r}")

        for lineno, record in edge_records:
            kg._load_edge(lineno, record)
        return kg

    def _load_entity(self, lineno: int, record: dict) -> None:
        try:
            eid = str(record["id"])
            label = str(record["label"]).strip()
            concepts = record.get("concepts", [])
            attributes = record.get("attributes", {})
        except KeyError as exc:
            raise MalformedKg(lineno, f"entity missing field {exc}") from exc
        if not eid:
            raise MalformedKg(lineno, "entity id is empty")
        if eid in self.entities:
            raise DuplicateEntityId(lineno, f"duplicate entity id {eid!r}")
        if not label:
            raise MalformedKg(lineno, "entity label is empty")
        if not isinstance(concepts, list) or any(not str(c).strip() for c in concepts):
            raise MalformedKg(lineno, "concepts must be non-empty strings")
        if not isinstance(attributes, dict):
            raise MalformedKg(lineno, "attributes must be an object")

        parsed_attrs: dict[str, list[TypedValue]] = {}
        for key, values in attributes.items():
            if not isinstance(values, list):
                raise MalformedKg(lineno, f"attribute {key!r} must hold a list")
            try:
                parsed_attrs[str(key)] = [TypedValue.from_json(v) for v in values]
            except ValueError as exc:
                raise MalformedKg(lineno, str(exc)) from exc

        entity = Entity(id=eid, label=label, concepts={str(c) for c in concepts}, attributes=parsed_attrs)
        self.entities[eid] = entity
        self.label_index.setdefault(label, set()).add(eid)
        m = _GEN_ID.match(eid)
        if m:
            self._gen_counter = max(self._gen_counter, int(m.group(1)) + 1)

    def _load_edge(self, lineno: int, record: dict) -> None:
        try:
            edge = RelationEdge(
                subject=str(record["subject"]),
                predicate=str(record["predicate"]),
                object=str(record["object"]),
            )
        except KeyError as exc:
            raise MalformedKg(lineno, f"edge missing field {exc}") from exc
        for endpoint in (edge.subject, edge.object):
            if endpoint not in self.entities:
                raise MalformedKg(lineno, f"edge references unknown entity {endpoint!r}")
        if edge in self.edges:
            raise MalformedKg(lineno, f"duplicate edge {edge}")
        self.edges.add(edge)

    # --- stats and helpers ------------------------------------------------

    def stats(self) -> dict[str, int]:
        with self._lock.read():
            attributes = sum(
                len(values) for e in self.entities.values() for values in e.attributes.values()
            )
            return {"entities": len(self.entities), "edges": len(self.edges), "attributes": attributes}

    def read_lock(self):
        """Shared lock for compound read-only operations (e.g. query execution)."""
        return self._lock.read()

    def entities_by_label(self, label: str) -> list[Entity]:
        with self._lock.read():
            ids = self.label_index.get(label.strip(), set())
            return [self.entities[i] for i in sorted(ids)]

    def _entity_for_label(self, label: str) -> Entity | None:
        ids = self.label_index.get(label)
        if not ids:
            return None
        # deterministic pick when one label names several entities
        return self.entities[min(ids)]

    def _create_entity(self, label: str) -> Entity:
        eid = f"gen:{self._gen_counter}"
        self._gen_counter += 1
        entity = Entity(id=eid, label=label)
        self.entities[eid] = entity
        self.label_index.setdefault(label, set()).add(eid)
        return entity

    # --- triple-level operations -------------------------------------------

    def add_triple(self, t: Triple) -> AddOutcome:
        """Ensure a fully-known fact is present.

        Objects naming an existing entity become relation edges; anything else
        becomes a typed attribute on the subject. Unknown subjects are created
        with a fresh generated id and no concepts.
        """
        if not t.is_complete:
            raise IncompleteTriple(f"cannot add triple with unknown slots: {t.render()}")
        with self._lock.write():
            target = self._entity_for_label(t.object)  # type: ignore[arg-type]
            subject = self._entity_for_label(t.subject)  # type: ignore[arg-type]
            if subject is None:
                subject = self._create_entity(t.subject)  # type: ignore[arg-type]
            if target is not None:
                edge = RelationEdge(subject=subject.id, predicate=t.predicate, object=target.id)  # type: ignore[arg-type]
                if edge in self.edges:
                    return AddOutcome.ALREADY_PRESENT
                self.edges.add(edge)
                return AddOutcome.ADDED_EDGE
            value = parse_value(t.object, t.predicate)  # type: ignore[arg-type]
            existing = subject.attributes.get(t.predicate, [])  # type: ignore[arg-type]
            if any(v.render() == value.render() for v in existing):
                return AddOutcome.ALREADY_PRESENT
            subject.attributes.setdefault(t.predicate, []).append(value)  # type: ignore[arg-type]
            return AddOutcome.ADDED_ATTRIBUTE

    def remove_matching(self, pattern: Triple) -> int:
        """Remove every edge and attribute unifying with the pattern.

        Unknown slots match anything; entities themselves are kept. Returns
        the number of facts removed (zero is a valid result).
        """
        removed = 0
        with self._lock.write():
            for edge in sorted(self.edges, key=lambda e: (e.subject, e.predicate, e.object)):
                s_label = self.entities[edge.subject].label
                o_label = self.entities[edge.object].label
                if pattern.matches(s_label, edge.predicate, o_label):
                    self.edges.discard(edge)
                    removed += 1
            for entity in self.entities.values():
                if pattern.subject is not None and entity.label != pattern.subject:
                    continue
                for key in list(entity.attributes):
                    if pattern.predicate is not None and key != pattern.predicate:
                        continue
                    kept = [
                        v
                        for v in entity.attributes[key]
                        if not pattern.matches(entity.label, key, v.render())
                    ]
                    removed += len(entity.attributes[key]) - len(kept)
                    if kept:
                        entity.attributes[key] = kept
                    else:
                        del entity.attributes[key]
        return removed

    def match_triples(self, pattern: Triple) -> list[Triple]:
        """All fully-known facts unifying with the pattern, deduplicated and
        sorted by (subject label, predicate, object text)."""
        with self._lock.read():
            found: set[Triple] = set()
            for edge in self.edges:
                s_label = self.entities[edge.subject].label
                o_label = self.entities[edge.object].label
                if pattern.matches(s_label, edge.predicate, o_label):
                    found.add(Triple(s_label, edge.predicate, o_label))
            for entity in self.entities.values():
                for key, values in entity.attributes.items():
                    for value in values:
                        text = value.render()
                        if pattern.matches(entity.label, key, text):
                            found.add(Triple(entity.label, key, text))
            return sorted(found, key=lambda t: (t.subject, t.predicate, t.object))

    # --- persistence ---------------------------------------------------------

    def snapshot(self) -> bytes:
        """Canonical serialization: entities by id, then edges, sorted."""
        with self._lock.read():
            out = io.StringIO()
            for eid in sorted(self.entities):
                entity = self.entities[eid]
                record = {
                    "type": "entity",
                    "id": entity.id,
                    "label": entity.label,
                    "concepts": sorted(entity.concepts),
                    "attributes": {
                        key: [v.to_json() for v in entity.attributes[key]]
                        for key in sorted(entity.attributes)
                    },
                }
                out.write(json.dumps(record, ensure_ascii=False) + "\n")
            for edge in sorted(self.edges, key=lambda e: (e.subject, e.predicate, e.object)):
                record = {
                    "type": "edge",
                    "subject": edge.subject,
                    "predicate": edge.predicate,
                    "object": edge.object,
                }
                out.write(json.dumps(record, ensure_ascii=False) + "\n")
            return out.getvalue().encode("utf-8")

    def copy(self) -> "KnowledgeGraph":
        return KnowledgeGraph.load(self.snapshot())


def load_kg(source: bytes | str | IO[bytes]) -> KnowledgeGraph:
    return KnowledgeGraph.load(source)


def restore(data: bytes) -> KnowledgeGraph:
    return KnowledgeGraph.load(data)
