"""Exception hierarchy shared across the package.

Every domain error maps onto a stable machine-readable code so the HTTP
layer and the CLI can translate failures without string matching.
"""

from __future__ import annotations


class KgqaError(Exception):
    """Base class for all domain errors."""

    code = "error"


# --- knowledge graph ---------------------------------------------------------


class KgError(KgqaError):
    code = "kg_error"


class MalformedKg(KgError):
    """A KG file or snapshot violates the line-delimited record schema."""

    code = "malformed_kg"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class DuplicateEntityId(MalformedKg):
    code = "duplicate_entity_id"


class InvalidTriple(KgqaError):
    """Triple with every slot unknown, or otherwise unconstructible."""

    code = "invalid_triple"


class IncompleteTriple(KgqaError):
    """An operation that requires fully-known triples was given an unknown slot."""

    code = "incomplete_triple"


# --- query engine ------------------------------------------------------------


class ParseError(KgqaError):
    code = "parse_error"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


# --- model gateway -----------------------------------------------------------


class GatewayError(KgqaError):
    code = "gateway_error"


class MissingVariable(GatewayError):
    code = "missing_variable"

    def __init__(self, name: str):
        super().__init__(f"template variable not bound: {name!r}")
        self.name = name


class NoScriptedResponse(GatewayError):
    code = "no_scripted_response"


class RemoteUnavailable(GatewayError):
    code = "remote_unavailable"

    def __init__(self, status: int, reason: str = ""):
        super().__init__(f"remote backend returned {status}" + (f": {reason}" if reason else ""))
        self.status = status


class GatewayTimeout(GatewayError):
    code = "gateway_timeout"


class MalformedOutput(KgqaError):
    """Model output did not contain the structure the parser requires."""

    code = "malformed_output"


class SlotMismatch(KgqaError):
    """A completed triple disagrees with a known slot it was required to keep."""

    code = "slot_mismatch"


# --- agent -------------------------------------------------------------------


class UnknownTool(KgqaError):
    code = "unknown_tool"


class AgentLoopExceeded(KgqaError):
    code = "agent_loop_exceeded"


class LlmFailure(KgqaError):
    """Agent run aborted by a model-side failure; carries the partial trace."""

    code = "llm_failure"

    def __init__(self, reason: str, steps: tuple = (), cause: Exception | None = None):
        super().__init__(reason)
        self.steps = steps
        self.cause = cause


# --- review queue ------------------------------------------------------------


class QueueError(KgqaError):
    code = "queue_error"


class UnknownId(QueueError):
    code = "unknown_record"


class EmptyRecord(QueueError):
    code = "empty_record"


class IllegalTransition(QueueError):
    code = "illegal_transition"


class TerminalState(IllegalTransition):
    code = "terminal_state"


class NoEvidence(QueueError):
    """Verification refused: the corpus produced zero hits for the record."""

    code = "no_evidence"


class UnknownStatus(QueueError):
    code = "bad_status"


# --- corpora and fixtures ----------------------------------------------------


class MalformedCorpus(KgqaError):
    code = "malformed_corpus"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class FixtureError(KgqaError):
    code = "fixture_error"
