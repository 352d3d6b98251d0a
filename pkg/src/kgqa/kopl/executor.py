"""Program execution with uniform failure normalization.

Any runtime condition at all — unknown label, unknown predicate or attribute,
an empty intermediate or final entity set, a type mismatch between a step and
its input — yields the single Failed result. Nothing escapes execute() as an
exception, so callers can branch on exactly two outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from kgqa.kg.store import KnowledgeGraph
from kgqa.kg.values import TypedValue
from kgqa.kopl.program import QueryProgram, Step, StepFunction

FAILED_TEXT = "Failed"


@dataclass(frozen=True)
class EntitySet:
    ids: frozenset[str]


@dataclass(frozen=True)
class ValueList:
    values: tuple[TypedValue, ...]


@dataclass(frozen=True)
class NumberValue:
    value: int


@dataclass(frozen=True)
class NameList:
    names: tuple[str, ...]


ExecValue = Union[EntitySet, ValueList, NumberValue, NameList]


class StepFailure(Exception):
    """Internal signal; absorbed by execute() into the Failed result."""


@dataclass(frozen=True)
class ExecResult:
    answer: str | None
    value: ExecValue | None

    @property
    def ok(self) -> bool:
        return self.answer is not None

    def render(self) -> str:
        return self.answer if self.answer is not None else FAILED_TEXT

    @classmethod
    def failed(cls) -> "ExecResult":
        return cls(answer=None, value=None)


def _require_entity_set(value: ExecValue, step: Step) -> EntitySet:
    if not isinstance(value, EntitySet):
        raise StepFailure(f"{step.function.value} needs an entity set input")
    return value


def _sorted_entities(ids, kg: KnowledgeGraph):
    return sorted((kg.entities[i] for i in ids), key=lambda e: (e.label, e.id))


def evaluate_step(step: Step, inputs: list[ExecValue], kg: KnowledgeGraph) -> ExecValue:
    """Pure function of (step, inputs, graph); raises StepFailure on any miss.

    Caller must hold the graph's read lock for the duration of the program.
    """
    fn = step.function

    if fn is StepFunction.FIND_ALL:
        result = frozenset(kg.entities)
    elif fn is StepFunction.FIND:
        label = step.args[0].strip()
        result = frozenset(kg.label_index.get(label, set()))
    elif fn is StepFunction.FILTER_CONCEPT:
        source = _require_entity_set(inputs[0], step)
        concept = step.args[0]
        result = frozenset(i for i in source.ids if concept in kg.entities[i].concepts)
    elif fn is StepFunction.FILTER_ATTR_EQ:
        source = _require_entity_set(inputs[0], step)
        key, wanted = step.args
        result = frozenset(
            i
            for i in source.ids
            if any(v.render() == wanted for v in kg.entities[i].attributes.get(key, []))
        )
    elif fn is StepFunction.RELATE:
        source = _require_entity_set(inputs[0], step)
        predicate, direction = step.args
        if direction == "forward":
            result = frozenset(
                e.object for e in kg.edges if e.predicate == predicate and e.subject in source.ids
            )
        else:
            result = frozenset(
                e.subject for e in kg.edges if e.predicate == predicate and e.object in source.ids
            )
    elif fn is StepFunction.QUERY_ATTR:
        source = _require_entity_set(inputs[0], step)
        key = step.args[0]
        values: list[TypedValue] = []
        for entity in _sorted_entities(source.ids, kg):
            values.extend(entity.attributes.get(key, []))
        if not values:
            raise StepFailure(f"no values for attribute {key!r}")
        return ValueList(values=tuple(values))
    elif fn is StepFunction.QUERY_NAME:
        source = _require_entity_set(inputs[0], step)
        return NameList(names=tuple(sorted(kg.entities[i].label for i in source.ids)))
    elif fn is StepFunction.COUNT:
        source = _require_entity_set(inputs[0], step)
        return NumberValue(value=len(source.ids))
    elif fn is StepFunction.AND:
        a = _require_entity_set(inputs[0], step)
        b = _require_entity_set(inputs[1], step)
        result = a.ids & b.ids
    elif fn is StepFunction.OR:
        a = _require_entity_set(inputs[0], step)
        b = _require_entity_set(inputs[1], step)
        result = a.ids | b.ids
    else:  # pragma: no cover - enum is closed
        raise StepFailure(f"unsupported function {fn}")

    if not result:
        raise StepFailure(f"{fn.value} produced an empty entity set")
    return EntitySet(ids=frozenset(result))


def render_value(value: ExecValue, kg: KnowledgeGraph) -> str:
    """Canonical answer text: names joined by ", ", label-ascending."""
    if isinstance(value, EntitySet):
        return ", ".join(sorted(kg.entities[i].label for i in value.ids))
    if isinstance(value, ValueList):
        return ", ".join(v.render() for v in value.values)
    if isinstance(value, NumberValue):
        return str(value.value)
    return ", ".join(value.names)


def execute(program: QueryProgram, kg: KnowledgeGraph) -> ExecResult:
    """Run a parsed program; the codomain is exactly {Success, Failed}."""
    try:
        with kg.read_lock():
            computed: list[ExecValue] = []
            for step in program.steps:
                inputs = [computed[d] for d in step.deps]
                computed.append(evaluate_step(step, inputs, kg))
            final = computed[-1]
            return ExecResult(answer=render_value(final, kg), value=final)
    except StepFailure:
        return ExecResult.failed()
    except Exception:
        # totality: malformed programs or graph races must not leak exceptions
        return ExecResult.failed()
