"""FastAPI application: QA, traces, pending-knowledge review, KG stats.

Handlers hold no state of their own; everything lives in the engine's graph,
queue, and trace store, so a restart on the same event log and snapshot
serves identical views. Every error returns a documented (code, status) pair.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, TimeoutError as FutureTimeout

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from kgqa.agent.trace import steps_to_records
from kgqa.engine import Engine
from kgqa.errors import (
    GatewayError,
    GatewayTimeout,
    IllegalTransition,
    IncompleteTriple,
    InvalidTriple,
    KgqaError,
    LlmFailure,
    NoEvidence,
    RemoteUnavailable,
    TerminalState,
    UnknownId,
    UnknownStatus,
)
from kgqa.kg.triples import Triple
from kgqa.service.schemas import (
    AcceptResponse,
    AskRequest,
    AskResponse,
    EditRequest,
    HealthResponse,
    PendingRecordModel,
    StatsResponse,
    TraceResponse,
)

DEFAULT_ASK_TIMEOUT = 120.0

# closed error taxonomy: exception class -> (code, HTTP status)
_ERROR_MAP: list[tuple[type, tuple[str, int]]] = [
    (UnknownId, ("unknown_record", 404)),
    (UnknownStatus, ("bad_status", 400)),
    (TerminalState, ("terminal_state", 409)),
    (IllegalTransition, ("illegal_transition", 409)),
    (IncompleteTriple, ("incomplete_triple", 422)),
    (InvalidTriple, ("invalid_triple", 422)),
    (NoEvidence, ("no_evidence", 422)),
    (RemoteUnavailable, ("backend_unavailable", 503)),
    (GatewayTimeout, ("backend_unavailable", 503)),
    (GatewayError, ("llm_failure", 502)),
    (KgqaError, ("bad_request", 422)),
]


class ApiError(Exception):
    def __init__(self, code: str, message: str, status: int, trace: dict | None = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status
        self.trace = trace


def _classify(exc: Exception) -> ApiError:
    if isinstance(exc, LlmFailure):
        trace = {"steps": steps_to_records(tuple(exc.steps))}
        if isinstance(exc.cause, (RemoteUnavailable, GatewayTimeout)):
            return ApiError("backend_unavailable", str(exc), 503, trace=trace)
        return ApiError("llm_failure", str(exc), 502, trace=trace)
    for klass, (code, status) in _ERROR_MAP:
        if isinstance(exc, klass):
            return ApiError(code, str(exc), status)
    return ApiError("internal_error", str(exc), 502)


def create_app(engine: Engine, cors_origin: str = "*", ask_timeout: float = DEFAULT_ASK_TIMEOUT) -> FastAPI:
    app = FastAPI(title="kgqa", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    executor = ThreadPoolExecutor(max_workers=8, thread_name_prefix="ask")

    def _error(exc: ApiError) -> JSONResponse:
        body: dict = {"code": exc.code, "message": exc.message, "trace": exc.trace}
        return JSONResponse(status_code=exc.status, content=body)

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return _error(exc)

    @app.exception_handler(KgqaError)
    async def handle_domain_error(request: Request, exc: KgqaError):
        return _error(_classify(exc))

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        return _error(ApiError("validation_error", str(exc.errors()[:1]), 422))

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_error(request: Request, exc: StarletteHTTPException):
        code = "not_found" if exc.status_code == 404 else "http_error"
        return _error(ApiError(code, str(exc.detail), exc.status_code))

    @app.exception_handler(Exception)
    async def handle_unexpected(request: Request, exc: Exception):
        return _error(ApiError("internal_error", str(exc), 502))

    # --- question answering --------------------------------------------------

    @app.post("/api/ask", response_model=AskResponse)
    def ask(body: AskRequest):
        question = body.question.strip()
        if not question:
            raise ApiError("empty_question", "question must be non-empty", 422)
        future = executor.submit(engine.ask, question)
        try:
            trace = future.result(timeout=ask_timeout)
        except FutureTimeout:
            raise ApiError("ask_timeout", f"no answer within {ask_timeout}s", 503) from None
        except KgqaError as exc:
            raise _classify(exc) from exc
        return AskResponse(
            trace_id=trace["trace_id"],
            route=trace["route"],
            final_answer=trace["final_answer"],
            pending_ids=trace["pending_ids"],
            steps=trace["steps"],
        )

    @app.get("/api/traces/{trace_id}", response_model=TraceResponse)
    def get_trace(trace_id: str):
        trace = engine.get_trace(trace_id)
        if trace is None:
            raise ApiError("unknown_trace", f"no trace {trace_id!r}", 404)
        return TraceResponse(**trace)

    # --- pending-knowledge management ----------------------------------------

    @app.get("/api/pending", response_model=list[PendingRecordModel])
    def list_pending(status: str | None = None):
        return engine.list_pending(status)

    @app.get("/api/pending/{record_id}", response_model=PendingRecordModel)
    def get_pending(record_id: str):
        return engine.get_pending(record_id)

    @app.post("/api/pending/{record_id}/accept", response_model=AcceptResponse)
    def accept(record_id: str):
        return engine.accept(record_id, actor="api")

    @app.post("/api/pending/{record_id}/verify", response_model=PendingRecordModel)
    def verify(record_id: str):
        return engine.verify(record_id, actor="api")

    @app.post("/api/pending/{record_id}/edit", response_model=PendingRecordModel)
    def edit(record_id: str, body: EditRequest):
        triples = [Triple.from_json(t) for t in body.triples]
        return engine.edit(record_id, triples, actor="api")

    @app.post("/api/pending/{record_id}/reject", response_model=PendingRecordModel)
    def reject(record_id: str):
        return engine.reject(record_id, actor="api")

    # --- graph views -----------------------------------------------------------

    @app.get("/api/kg/stats", response_model=StatsResponse)
    def kg_stats():
        return engine.kg_stats()

    @app.get("/api/health", response_model=HealthResponse)
    def health():
        return HealthResponse()

    return app
