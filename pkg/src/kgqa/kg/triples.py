"""Subject/predicate/object facts; a slot may be unknown ("?")."""

from __future__ import annotations

import re
from dataclasses import dataclass

from kgqa.errors import InvalidTriple

UNKNOWN_TOKEN = "?"


@dataclass(frozen=True)
class Triple:
    """A fact with up to two unknown slots; None marks an unknown.

    Known slots are trimmed and non-empty. The canonical text form is
    "(s; p; o)" with unknowns rendered as "?".
    """

    subject: str | None
    predicate: str | None
    object: str | None

    def __post_init__(self):
        slots = []
        for name in ("subject", "predicate", "object"):
            value = getattr(self, name)
            if value is not None:
                value = value.strip()
                if not value:
                    raise InvalidTriple(f"{name} slot is empty")
                object.__setattr__(self, name, value)
            slots.append(value)
        if all(s is None for s in slots):
            raise InvalidTriple("all three slots are unknown")

    @property
    def slots(self) -> tuple[str | None, str | None, str | None]:
        return (self.subject, self.predicate, self.object)

    @property
    def is_complete(self) -> bool:
        return all(s is not None for s in self.slots)

    @property
    def unknown_count(self) -> int:
        return sum(1 for s in self.slots if s is None)

    def render(self) -> str:
        parts = [s if s is not None else UNKNOWN_TOKEN for s in self.slots]
        return f"({parts[0]}; {parts[1]}; {parts[2]})"

    def matches(self, subject: str, predicate: str, obj: str) -> bool:
        """Unification against a concrete fact: unknown slots match anything."""
        for pattern_slot, fact_slot in zip(self.slots, (subject, predicate, obj)):
            if pattern_slot is not None and pattern_slot != fact_slot:
                return False
        return True

    def agrees_with(self, other: "Triple") -> bool:
        """True when every known slot of self equals the same slot of other."""
        for mine, theirs in zip(self.slots, other.slots):
            if mine is not None and mine != theirs:
                return False
        return True

    def to_json(self) -> list[str | None]:
        return list(self.slots)

    @classmethod
    def from_json(cls, data: list[str | None]) -> "Triple":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise InvalidTriple(f"triple must have exactly 3 slots, got {data!r}")
        slots = [None if s in (None, UNKNOWN_TOKEN) else str(s) for s in data]
        return cls(slots[0], slots[1], slots[2])


# slots may not contain ";" (the separator); anything else is allowed
_TRIPLE_LINE = re.compile(r"^\s*\(([^;]*);([^;]*);([^;]*)\)\s*$")


def parse_triple_line(line: str) -> Triple | None:
    """Parse one "(s; p; o)" line; returns None when the line is not a triple.

    A structurally valid line whose slots are all "?" raises InvalidTriple;
    a line with an empty slot is simply not a triple.
    """
    m = _TRIPLE_LINE.match(line)
    if not m:
        return None
    slots: list[str | None] = []
    for raw in m.groups():
        value = raw.strip()
        if not value:
            return None
        slots.append(None if value == UNKNOWN_TOKEN else value)
    return Triple(slots[0], slots[1], slots[2])
