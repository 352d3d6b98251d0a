"""Regenerate frontend/tests/fixtures.ts from real service responses.

Run from the repo root: python tools/make_ui_fixtures.py
Keeps the UI tests pinned to the actual wire contract.
"""

from __future__ import annotations

import json
from pathlib import Path

from kgqa.clock import TickClock
from kgqa.config import Config
from kgqa.engine import Engine
from kgqa.kg.triples import Triple

OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures.ts"


def main() -> None:
    cfg = Config(kg="fixture", corpus="fixture", script="demo")
    engine = Engine.from_config(cfg, clock=TickClock())

    keys = ("trace_id", "route", "final_answer", "pending_ids", "steps")
    hit = engine.ask("What is the capital of France?")
    hit_ask = {k: hit[k] for k in keys}
    born = engine.ask("Where was Marie Curie born?")
    born_ask = {k: born[k] for k in keys}

    engine.kg.remove_matching(Triple("France", "capital", None))
    miss = engine.ask("What is the capital of France?")
    miss_ask = {k: miss[k] for k in keys}
    rid = miss["pending_ids"][0]
    pending = engine.get_pending(rid)
    verified = engine.verify(rid)

    def ts(value: dict) -> str:
        return json.dumps(value, indent=2, ensure_ascii=False)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(
        "/** Wire fixtures captured from the real service over the packaged fixtures.\n"
        " * Regenerate with tools/make_ui_fixtures.py in the repository root.\n"
        " */\n\n"
        'import type { AskResponse, PendingRecord } from "../src/types";\n\n'
        f"export const HIT_ASK: AskResponse = {ts(hit_ask)};\n\n"
        f"export const BORN_ASK: AskResponse = {ts(born_ask)};\n\n"
        f"export const MISS_ASK: AskResponse = {ts(miss_ask)};\n\n"
        f"export const PENDING_RECORD: PendingRecord = {ts(pending)};\n\n"
        f"export const VERIFIED_RECORD: PendingRecord = {ts(verified)};\n",
        "utf-8",
    )
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
