"""In-memory knowledge graph: entities, typed attributes, labeled edges."""

from kgqa.kg.store import (
    AddOutcome,
    Entity,
    KnowledgeGraph,
    RelationEdge,
    load_kg,
    restore,
)
from kgqa.kg.triples import Triple, parse_triple_line
from kgqa.kg.values import TypedValue, ValueKind, parse_value

__all__ = [
    "AddOutcome",
    "Entity",
    "KnowledgeGraph",
    "RelationEdge",
    "Triple",
    "TypedValue",
    "ValueKind",
    "load_kg",
    "parse_triple_line",
    "parse_value",
    "restore",
]
