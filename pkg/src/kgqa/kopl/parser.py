"""Parser for the canonical program text."""

from __future__ import annotations

import re

from kgqa.errors import ParseError
from kgqa.kopl.program import ARITY, RELATE_DIRECTIONS, QueryProgram, Step, StepFunction

_LINE = re.compile(
    r"^\s*(\d+)\.\s*([A-Za-z_][A-Za-z0-9_]*)\s*\((.*)\)\s*(?:<-\s*\[([^\]]*)\]\s*)?$"
)

_FUNCTIONS = {f.value: f for f in StepFunction}


def _split_args(text: str, lineno: int) -> tuple[str, ...]:
    """Comma-separated double-quoted strings; no escape sequences."""
    args: list[str] = []
    rest = text.strip()
    while rest:
        if not rest.startswith('"'):
            raise ParseError(lineno, f"expected quoted argument near {rest[:20]!r}")
        end = rest.find('"', 1)
        if end < 0:
            raise ParseError(lineno, "unterminated argument string")
        args.append(rest[1:end])
        rest = rest[end + 1 :].lstrip()
        if rest.startswith(","):
            rest = rest[1:].lstrip()
            if not rest:
                raise ParseError(lineno, "trailing comma in argument list")
        elif rest:
            raise ParseError(lineno, f"unexpected text after argument: {rest[:20]!r}")
    return tuple(args)


def _split_deps(text: str | None, lineno: int) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    deps = []
    for part in text.split(","):
        part = part.strip()
        if not part.isdigit():
            raise ParseError(lineno, f"dependency is not an index: {part!r}")
        deps.append(int(part))
    return tuple(deps)


def parse_program(text: str) -> QueryProgram:
    """Parse canonical program text, validating arity, indices, and the DAG."""
    steps: list[Step] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        m = _LINE.match(raw)
        if not m:
            raise ParseError(lineno, f"malformed step: {raw.strip()[:40]!r}")
        index = int(m.group(1))
        if index != len(steps):
            raise ParseError(lineno, f"expected step index {len(steps)}, got {index}")
        name = m.group(2)
        function = _FUNCTIONS.get(name)
        if function is None:
            raise ParseError(lineno, f"unknown function: {name!r}")
        args = _split_args(m.group(3), lineno)
        deps = _split_deps(m.group(4), lineno)
        want_args, want_deps = ARITY[function]
        if len(args) != want_args:
            raise ParseError(lineno, f"{name} takes {want_args} argument(s), got {len(args)}")
        if len(deps) != want_deps:
            raise ParseError(lineno, f"{name} takes {want_deps} dependenc(ies), got {len(deps)}")
        for dep in deps:
            if dep >= index:
                raise ParseError(lineno, f"dependency {dep} does not precede step {index}")
        if function is StepFunction.RELATE and args[1] not in RELATE_DIRECTIONS:
            raise ParseError(lineno, f"Relate direction must be forward or backward, got {args[1]!r}")
        steps.append(Step(index=index, function=function, args=args, deps=deps))

    if not steps:
        raise ParseError(lineno or 1, "program has no steps")

    referenced = {dep for step in steps for dep in step.deps}
    for step in steps[:-1]:
        if step.index not in referenced:
            raise ParseError(step.index + 1, f"step {step.index} is never used")
    return QueryProgram(steps=tuple(steps))
