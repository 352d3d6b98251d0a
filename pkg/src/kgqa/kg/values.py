"""Typed attribute values and their canonical text rendering."""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from enum import Enum
from typing import Any


class ValueKind(str, Enum):
    TEXT = "text"
    QUANTITY = "quantity"
    YEAR = "year"


def format_decimal(d: Decimal) -> str:
    """Plain decimal notation, no exponent, no trailing fraction zeros."""
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    if s in ("", "-0"):
        return "0"
    return s


@dataclass(frozen=True)
class TypedValue:
    """Exactly one payload is populated, matching `kind`."""

    kind: ValueKind
    text: str | None = None
    number: Decimal | None = None
    unit: str | None = None
    year: int | None = None

    def __post_init__(self):
        if self.kind is ValueKind.TEXT:
            ok = self.text is not None and self.number is None and self.year is None
        elif self.kind is ValueKind.QUANTITY:
            # unit may be "" (dimensionless) but never absent
            ok = self.number is not None and self.unit is not None and self.text is None and self.year is None
        else:
            ok = self.year is not None and self.text is None and self.number is None
        if not ok:
            raise ValueError(f"payload does not match kind {self.kind}")

    @classmethod
    def of_text(cls, text: str) -> "TypedValue":
        return cls(kind=ValueKind.TEXT, text=text)

    @classmethod
    def of_quantity(cls, number: Decimal | int | str, unit: str = "") -> "TypedValue":
        return cls(kind=ValueKind.QUANTITY, number=Decimal(str(number)), unit=unit)

    @classmethod
    def of_year(cls, year: int) -> "TypedValue":
        return cls(kind=ValueKind.YEAR, year=int(year))

    def render(self) -> str:
        """Canonical text: quantities with units are space-separated."""
        if self.kind is ValueKind.TEXT:
            return self.text  # type: ignore[return-value]
        if self.kind is ValueKind.QUANTITY:
            base = format_decimal(self.number)  # type: ignore[arg-type]
            return f"{base} {self.unit}" if self.unit else base
        return str(self.year)

    def to_json(self) -> dict[str, Any]:
        if self.kind is ValueKind.TEXT:
            return {"kind": "text", "text": self.text}
        if self.kind is ValueKind.QUANTITY:
            # number carried as a string to keep round trips exact
            return {"kind": "quantity", "number": format_decimal(self.number), "unit": self.unit}
        return {"kind": "year", "year": self.year}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "TypedValue":
        kind = data.get("kind")
        try:
            if kind == "text":
                return cls.of_text(str(data["text"]))
            if kind == "quantity":
                return cls.of_quantity(Decimal(str(data["number"])), str(data.get("unit", "")))
            if kind == "year":
                return cls.of_year(int(data["year"]))
        except (KeyError, ValueError, InvalidOperation) as exc:
            raise ValueError(f"bad typed value: {exc}") from exc
        raise ValueError(f"unknown value kind: {kind!r}")


_NUMERIC = re.compile(r"^[+-]?\d+(\.\d+)?$")
_BARE_YEAR = re.compile(r"^\d{4}$")


def parse_value(text: str, predicate: str) -> TypedValue:
    """Deterministic typing of an object string added through a triple.

    Digit strings (optional sign/decimal point) become dimensionless
    quantities; a bare 4-digit integer in [1000, 2999] becomes a year only
    when the predicate ends in "date" or "year"; everything else is text.
    """
    t = text.strip()
    if _NUMERIC.match(t):
        if _BARE_YEAR.match(t) and 1000 <= int(t) <= 2999 and (
            predicate.endswith("date") or predicate.endswith("year")
        ):
            return TypedValue.of_year(int(t))
        return TypedValue.of_quantity(Decimal(t))
    return TypedValue.of_text(t)
