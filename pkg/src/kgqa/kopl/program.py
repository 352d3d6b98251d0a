"""Program model: a topologically ordered DAG of typed steps.

Canonical text has one step per line:

    0. Find("France")
    1. Relate("capital","forward") <- [0]
    2. QueryName() <- [1]

Arguments are double-quoted and comma-separated; dependencies are listed in
brackets after "<-" and always point at earlier steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class StepFunction(str, Enum):
    FIND_ALL = "FindAll"
    FIND = "Find"
    FILTER_CONCEPT = "FilterConcept"
    FILTER_ATTR_EQ = "FilterAttrEq"
    RELATE = "Relate"
    QUERY_ATTR = "QueryAttr"
    QUERY_NAME = "QueryName"
    COUNT = "Count"
    AND = "And"
    OR = "Or"


# function -> (argument count, dependency count)
ARITY: dict[StepFunction, tuple[int, int]] = {
    StepFunction.FIND_ALL: (0, 0),
    StepFunction.FIND: (1, 0),
    StepFunction.FILTER_CONCEPT: (1, 1),
    StepFunction.FILTER_ATTR_EQ: (2, 1),
    StepFunction.RELATE: (2, 1),
    StepFunction.QUERY_ATTR: (1, 1),
    StepFunction.QUERY_NAME: (0, 1),
    StepFunction.COUNT: (0, 1),
    StepFunction.AND: (0, 2),
    StepFunction.OR: (0, 2),
}

RELATE_DIRECTIONS = ("forward", "backward")


@dataclass(frozen=True)
class Step:
    index: int
    function: StepFunction
    args: tuple[str, ...] = ()
    deps: tuple[int, ...] = ()


@dataclass(frozen=True)
class QueryProgram:
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)


def serialize(program: QueryProgram) -> str:
    """Canonical text form; parse_program(serialize(p)) == p."""
    lines = []
    for step in program.steps:
        args = ",".join(f'"{a}"' for a in step.args)
        line = f"{step.index}. {step.function.value}({args})"
        if step.deps:
            line += " <- [" + ",".join(str(d) for d in step.deps) + "]"
        lines.append(line)
    return "\n".join(lines)
