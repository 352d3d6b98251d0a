"""Configuration: JSON config file, environment overrides, fixture aliases.

Precedence is explicit value > environment (KGQA_*) > config file > default.
Bare names like "fixture" or "demo" resolve to the packaged fixture files so
a demo run needs no paths at all.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path

ENV_PREFIX = "KGQA_"

_FIXTURE_ALIASES: dict[str, dict[str, str]] = {
    "kg": {"fixture": "kg/fixture.jsonl"},
    "corpus": {"fixture": "corpus/fixture.jsonl"},
    "script": {"demo": "scripts/demo.jsonl"},
    "eval": {"synthetic20": "eval/synthetic20.jsonl"},
}


@dataclass
class Config:
    kg: str | None = None
    corpus: str | None = None
    script: str | None = None
    remote_url: str | None = None
    remote_model: str = "default"
    remote_timeout: float = 30.0
    remote_max_in_flight: int = 4
    event_log: str | None = None
    trace_spill: str | None = None
    index_cache: str | None = None
    host: str = "127.0.0.1"
    port: int = 8000
    cors_origin: str = "*"
    ask_timeout: float = 120.0


def fixture_path(kind: str, name: str) -> Path | None:
    relative = _FIXTURE_ALIASES.get(kind, {}).get(name)
    if relative is None:
        return None
    return Path(str(resources.files("kgqa") / "fixtures" / relative))


def resolve_source(kind: str, value: str) -> Path:
    """Resolve a CLI/config value to a real path: alias first, then the path itself."""
    alias = fixture_path(kind, value)
    if alias is not None and alias.exists():
        return alias
    return Path(value)


def load_config(
    path: str | Path | None = None,
    env: dict[str, str] | None = None,
    overrides: dict[str, object] | None = None,
) -> Config:
    env = os.environ if env is None else env
    values: dict[str, object] = {}

    if path is not None:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(raw, dict):
            raise ValueError("config file must hold a JSON object")
        values.update(raw)

    for f in fields(Config):
        env_name = ENV_PREFIX + f.name.upper()
        if env_name in env:
            values[f.name] = env[env_name]

    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})

    known = {f.name: f.type for f in fields(Config)}
    unknown = set(values) - set(known)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")

    coerced: dict[str, object] = {}
    for f in fields(Config):
        if f.name not in values:
            continue
        value = values[f.name]
        if value is None:
            continue
        if f.name in ("remote_timeout", "ask_timeout"):
            coerced[f.name] = float(value)  # type: ignore[arg-type]
        elif f.name in ("remote_max_in_flight", "port"):
            coerced[f.name] = int(value)  # type: ignore[arg-type]
        else:
            coerced[f.name] = str(value)
    return Config(**coerced)  # type: ignore[arg-type]
