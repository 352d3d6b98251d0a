"""Remote chat backend: single-turn completion against an HTTP endpoint.

Speaks the common chat-completions shape ({"model", "messages", ...} in,
choices[0].message.content out), so any compatible endpoint can serve as the
model. Query generation and knowledge decomposition run at temperature 0;
answer integration at 0.7.
"""

from __future__ import annotations

import threading

import httpx

from kgqa.errors import GatewayTimeout, RemoteUnavailable
from kgqa.llm.roles import LlmRole

ROLE_TEMPERATURE: dict[LlmRole, float] = {
    LlmRole.ANSWER_INTEGRATION: 0.7,
}
DEFAULT_TEMPERATURE = 0.0


class RemoteBackend:
    tag = "remote"

    def __init__(
        self,
        endpoint: str,
        model: str,
        timeout: float = 30.0,
        max_in_flight: int = 4,
        client: httpx.Client | None = None,
    ):
        self.endpoint = endpoint
        self.model = model
        self.timeout = timeout
        self._slots = threading.BoundedSemaphore(max_in_flight)
        self._client = client or httpx.Client()

    def generate(self, role: LlmRole, variables: dict[str, str], prompt: str, budget: int) -> str:
        body = {
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": ROLE_TEMPERATURE.get(role, DEFAULT_TEMPERATURE),
            "max_tokens": budget,
        }
        with self._slots:
            try:
                response = self._client.post(self.endpoint, json=body, timeout=self.timeout)
            except httpx.TimeoutException as exc:
                raise GatewayTimeout(f"remote call timed out after {self.timeout}s") from exc
            except httpx.HTTPError as exc:
                raise RemoteUnavailable(0, str(exc)) from exc
        if response.status_code != 200:
            raise RemoteUnavailable(response.status_code)
        try:
            return str(response.json()["choices"][0]["message"]["content"])
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise RemoteUnavailable(response.status_code, "unexpected response shape") from exc
