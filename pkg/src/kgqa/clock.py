"""Injectable time source.

Queue events and traces are timestamped; tests and reproducibility checks
need byte-identical output across runs, so wall-clock access goes through a
Clock that can be swapped for a deterministic one.
"""

from __future__ import annotations

import threading
from datetime import datetime, timedelta, timezone
from typing import Protocol


class Clock(Protocol):
    def now(self) -> datetime: ...


class SystemClock:
    def now(self) -> datetime:
        return datetime.now(timezone.utc)


class TickClock:
    """Deterministic clock: starts at a fixed instant, advances a fixed step per call."""

    def __init__(self, start: datetime | None = None, step_seconds: float = 1.0):
        self._next = start or datetime(2024, 1, 1, tzinfo=timezone.utc)
        self._step = timedelta(seconds=step_seconds)
        self._lock = threading.Lock()

    def now(self) -> datetime:
        with self._lock:
            current = self._next
            self._next = current + self._step
        return current


def isoformat(ts: datetime) -> str:
    return ts.isoformat().replace("+00:00", "Z")
