"""Functional query language over the knowledge graph."""

from kgqa.kopl.executor import (
    EntitySet,
    ExecResult,
    NameList,
    NumberValue,
    ValueList,
    evaluate_step,
    execute,
)
from kgqa.kopl.parser import parse_program
from kgqa.kopl.program import ARITY, QueryProgram, Step, StepFunction, serialize

__all__ = [
    "ARITY",
    "EntitySet",
    "ExecResult",
    "NameList",
    "NumberValue",
    "QueryProgram",
    "Step",
    "StepFunction",
    "ValueList",
    "evaluate_step",
    "execute",
    "parse_program",
    "serialize",
]
