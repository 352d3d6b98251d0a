"""Append-only event log; replaying it from empty rebuilds the queue exactly."""

from __future__ import annotations

import json
from pathlib import Path


class EventLog:
    """Line-delimited {"record_id", "action", "payload", "actor", "ts"} events.

    With no path the log lives in memory only (ephemeral queues for tests
    and evaluation runs).
    """

    def __init__(self, path: Path | None = None):
        self.path = Path(path) if path is not None else None
        self._events: list[dict] = []
        if self.path is not None and self.path.exists():
            for line in self.path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    self._events.append(json.loads(line))

    def events(self) -> list[dict]:
        return list(self._events)

    def append(self, record_id: str, action: str, payload: dict, actor: str, ts: str) -> dict:
        event = {
            "record_id": record_id,
            "action": action,
            "payload": payload,
            "actor": actor,
            "ts": ts,
        }
        self._events.append(event)
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(event, ensure_ascii=False) + "\n")
                fh.flush()
        return event
