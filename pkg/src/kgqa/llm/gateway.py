"""Gateway: render a role's prompt and run it through the configured backend."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Protocol

from kgqa.llm.roles import LlmRole, render_prompt

DEFAULT_BUDGET = 1024


@dataclass(frozen=True)
class LlmRequest:
    role: LlmRole
    variables: dict[str, str]
    budget: int = DEFAULT_BUDGET


@dataclass(frozen=True)
class LlmResponse:
    text: str
    backend_tag: str
    latency: float


class Backend(Protocol):
    tag: str

    def generate(self, role: LlmRole, variables: dict[str, str], prompt: str, budget: int) -> str: ...


class Gateway:
    """Thread-safe front door; backends carry their own concurrency limits."""

    def __init__(self, backend: Backend):
        self.backend = backend

    def complete(self, request: LlmRequest) -> LlmResponse:
        prompt = render_prompt(request.role, request.variables)
        start = time.perf_counter()
        text = self.backend.generate(request.role, request.variables, prompt, request.budget)
        return LlmResponse(
            text=text,
            backend_tag=self.backend.tag,
            latency=time.perf_counter() - start,
        )

    def call(self, role: LlmRole, budget: int = DEFAULT_BUDGET, **variables: str) -> str:
        """Convenience wrapper returning just the response text."""
        return self.complete(LlmRequest(role=role, variables=variables, budget=budget)).text
