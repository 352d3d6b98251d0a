"""Strict parsers for model output.

Arbitrary text never causes anything beyond the declared error types; chatter
around the structured lines is ignored rather than fatal.
"""

from __future__ import annotations

import re

from kgqa.errors import MalformedOutput, SlotMismatch
from kgqa.kg.triples import Triple, parse_triple_line

_NUMBERED = re.compile(r"^\s*(\d+)\.\s+(.*\S)\s*$")


def parse_decomposition_steps(text: str) -> list[str]:
    """Lines of the form `<n>. <step>` with ascending n; chatter is ignored."""
    steps: list[str] = []
    last = 0
    for line in text.splitlines():
        m = _NUMBERED.match(line)
        if not m:
            continue
        n = int(m.group(1))
        if n <= last:
            continue
        last = n
        steps.append(m.group(2).strip())
    if not steps:
        raise MalformedOutput("no numbered steps found in model output")
    return steps


def parse_triples(text: str) -> list[Triple]:
    """Every "(s; p; o)" line, in order; "?" marks an unknown slot.

    Raises MalformedOutput when no line parses; a fully-unknown triple raises
    InvalidTriple from the Triple constructor.
    """
    triples: list[Triple] = []
    for line in text.splitlines():
        triple = parse_triple_line(line)
        if triple is not None:
            triples.append(triple)
    if not triples:
        raise MalformedOutput("no triples found in model output")
    return triples


def parse_completions(text: str, expected: list[Triple]) -> list[Triple]:
    """One fully-known triple per expected triple, matched by position.

    Known slots of each expected triple must be echoed unchanged; altering
    one is a SlotMismatch, a count mismatch or leftover unknown slot is
    MalformedOutput.
    """
    if not expected:
        raise ValueError("expected triples must be non-empty")
    completed = parse_triples(text)
    if len(completed) != len(expected):
        raise MalformedOutput(
            f"expected {len(expected)} completed triple(s), got {len(completed)}"
        )
    for got, want in zip(completed, expected):
        if not got.is_complete:
            raise MalformedOutput(f"triple still has unknown slots: {got.render()}")
        if not want.agrees_with(got):
            raise SlotMismatch(
                f"completion {got.render()} altered known slots of {want.render()}"
            )
    return completed
