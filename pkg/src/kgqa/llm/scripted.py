"""Deterministic scripted backend for model-free runs.

Script files are line-delimited JSON records:

    {"role": "...", "match": {"exact": {...}}, "response": "..."}
    {"role": "...", "match": {"pattern": "substring"}, "response": "..."}

Lookup is exact variables first, then the first pattern entry (in file order)
whose substring occurs in the rendered prompt. Missing both is an error, so a
scripted run can never silently improvise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO

from kgqa.errors import NoScriptedResponse
from kgqa.llm.roles import LlmRole


def canonical_key(variables: dict[str, str]) -> str:
    return json.dumps(variables, sort_keys=True, ensure_ascii=False)


@dataclass
class ScriptedBackend:
    tag = "scripted"

    def __init__(self):
        self._exact: dict[tuple[str, str], str] = {}
        self._fallbacks: list[tuple[str, str, str]] = []

    def add_exact(self, role: LlmRole, variables: dict[str, str], response: str) -> None:
        self._exact.setdefault((role.value, canonical_key(variables)), response)

    def add_pattern(self, role: LlmRole, pattern: str, response: str) -> None:
        self._fallbacks.append((role.value, pattern, response))

    def generate(self, role: LlmRole, variables: dict[str, str], prompt: str, budget: int) -> str:
        hit = self._exact.get((role.value, canonical_key(variables)))
        if hit is not None:
            return hit
        for rule_role, pattern, response in self._fallbacks:
            if rule_role == role.value and pattern in prompt:
                return response
        raise NoScriptedResponse(
            f"no scripted response for role {role.value} (variables: {sorted(variables)})"
        )


def load_script(source: bytes | str | IO[bytes]) -> ScriptedBackend:
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read().decode("utf-8")

    backend = ScriptedBackend()
    roles = {r.value: r for r in LlmRole}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"script line {lineno}: invalid record: {exc.msg}") from exc
        role = roles.get(record.get("role", ""))
        if role is None:
            raise ValueError(f"script line {lineno}: unknown role {record.get('role')!r}")
        match = record.get("match", {})
        response = record.get("response")
        if not isinstance(response, str):
            raise ValueError(f"script line {lineno}: response must be a string")
        if "exact" in match:
            variables = {str(k): str(v) for k, v in match["exact"].items()}
            backend.add_exact(role, variables, response)
        elif "pattern" in match:
            backend.add_pattern(role, str(match["pattern"]), response)
        else:
            raise ValueError(f"script line {lineno}: match needs 'exact' or 'pattern'")
    return backend
