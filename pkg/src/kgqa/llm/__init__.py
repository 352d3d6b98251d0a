"""Single boundary to the language model: roles, backends, output parsers."""

from kgqa.llm.gateway import Gateway, LlmRequest, LlmResponse
from kgqa.llm.output_parsers import (
    parse_completions,
    parse_decomposition_steps,
    parse_triples,
)
from kgqa.llm.roles import LlmRole, format_documents, render_prompt
from kgqa.llm.scripted import ScriptedBackend, load_script
from kgqa.llm.remote import RemoteBackend

__all__ = [
    "Gateway",
    "LlmRequest",
    "LlmResponse",
    "LlmRole",
    "RemoteBackend",
    "ScriptedBackend",
    "format_documents",
    "load_script",
    "parse_completions",
    "parse_decomposition_steps",
    "parse_triples",
    "render_prompt",
]
