"""Engine: wires the graph, gateway, index, queue, and trace store together.

The HTTP service and the CLI both drive this object, so every capability is
available in-process without a running server.
"""

from __future__ import annotations

import itertools
import json
from collections import OrderedDict
from pathlib import Path

from kgqa.agent.orchestrator import AgentDeps, answer_question, direct_answer
from kgqa.agent.trace import trace_to_json
from kgqa.clock import Clock, SystemClock
from kgqa.config import Config, resolve_source
from kgqa.errors import NoEvidence
from kgqa.kg.store import KnowledgeGraph
from kgqa.kg.triples import Triple
from kgqa.llm.gateway import Gateway
from kgqa.llm.remote import RemoteBackend
from kgqa.llm.scripted import load_script
from kgqa.pending.eventlog import EventLog
from kgqa.pending.records import record_to_json
from kgqa.pending.store import KnowledgeQueue
from kgqa.retrieval.bm25 import Bm25Index
from kgqa.retrieval.corpus import load_or_build_index

TRACE_CAP = 1000


class TraceStore:
    """Capped in-memory trace map with optional append-only file spill."""

    def __init__(self, cap: int = TRACE_CAP, spill_path: Path | None = None):
        self.cap = cap
        self.spill_path = spill_path
        self._traces: OrderedDict[str, dict] = OrderedDict()
        if spill_path is not None and spill_path.exists():
            for line in spill_path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    trace = json.loads(line)
                    self._put_memory(trace["trace_id"], trace)

    def _put_memory(self, trace_id: str, trace: dict) -> None:
        self._traces[trace_id] = trace
        self._traces.move_to_end(trace_id)
        while len(self._traces) > self.cap:
            self._traces.popitem(last=False)

    def put(self, trace: dict) -> None:
        self._put_memory(trace["trace_id"], trace)
        if self.spill_path is not None:
            self.spill_path.parent.mkdir(parents=True, exist_ok=True)
            with self.spill_path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(trace, ensure_ascii=False) + "\n")

    def get(self, trace_id: str) -> dict | None:
        return self._traces.get(trace_id)

    def __len__(self) -> int:
        return len(self._traces)


class Engine:
    def __init__(
        self,
        kg: KnowledgeGraph,
        gateway: Gateway,
        queue: KnowledgeQueue,
        index: Bm25Index | None = None,
        clock: Clock | None = None,
        traces: TraceStore | None = None,
    ):
        self.kg = kg
        self.gateway = gateway
        self.queue = queue
        self.index = index
        self.clock = clock or SystemClock()
        self.traces = traces or TraceStore()
        self._trace_ids = itertools.count(1)

    @classmethod
    def from_config(cls, cfg: Config, clock: Clock | None = None) -> "Engine":
        kg = KnowledgeGraph()
        if cfg.kg:
            kg = KnowledgeGraph.load(resolve_source("kg", cfg.kg).read_bytes())

        index = None
        if cfg.corpus:
            corpus_path = resolve_source("corpus", cfg.corpus)
            cache = Path(cfg.index_cache) if cfg.index_cache else None
            index = load_or_build_index(corpus_path, cache_path=cache)

        if cfg.script:
            backend = load_script(resolve_source("script", cfg.script).read_bytes())
        elif cfg.remote_url:
            backend = RemoteBackend(
                endpoint=cfg.remote_url,
                model=cfg.remote_model,
                timeout=cfg.remote_timeout,
                max_in_flight=cfg.remote_max_in_flight,
            )
        else:
            raise ValueError("configure either a script or a remote model endpoint")

        clock = clock or SystemClock()
        queue = KnowledgeQueue(
            EventLog(Path(cfg.event_log) if cfg.event_log else None), clock=clock
        )
        traces = TraceStore(spill_path=Path(cfg.trace_spill) if cfg.trace_spill else None)
        return cls(
            kg=kg,
            gateway=Gateway(backend),
            queue=queue,
            index=index,
            clock=clock,
            traces=traces,
        )

    def _next_trace_id(self) -> str:
        return f"tr:{next(self._trace_ids):04d}"

    @property
    def deps(self) -> AgentDeps:
        return AgentDeps(
            kg=self.kg,
            gateway=self.gateway,
            queue=self.queue,
            clock=self.clock,
            next_trace_id=self._next_trace_id,
        )

    # --- question answering ------------------------------------------------

    def ask(self, question: str) -> dict:
        trace = answer_question(question, self.deps)
        rendered = trace_to_json(trace)
        self.traces.put(rendered)
        return rendered

    def direct(self, question: str) -> dict:
        trace = direct_answer(question, self.deps)
        rendered = trace_to_json(trace)
        self.traces.put(rendered)
        return rendered

    # --- graph and queue views ----------------------------------------------

    def kg_stats(self) -> dict:
        return self.kg.stats()

    def get_trace(self, trace_id: str) -> dict | None:
        return self.traces.get(trace_id)

    def list_pending(self, status: str | None = None) -> list[dict]:
        return [record_to_json(r) for r in self.queue.list(status)]

    def get_pending(self, record_id: str) -> dict:
        return record_to_json(self.queue.get(record_id))

    def accept(self, record_id: str, actor: str = "admin") -> dict:
        outcomes = self.queue.accept(record_id, self.kg, actor=actor)
        return {"record": self.get_pending(record_id), "outcomes": outcomes}

    def verify(self, record_id: str, actor: str = "admin") -> dict:
        if self.index is None:
            raise NoEvidence("no retrieval corpus configured")
        record = self.queue.verify(record_id, self.index, self.gateway, actor=actor)
        return record_to_json(record)

    def edit(self, record_id: str, triples: list[Triple], actor: str = "admin") -> dict:
        return record_to_json(self.queue.edit(record_id, triples, actor=actor))

    def reject(self, record_id: str, actor: str = "admin") -> dict:
        return record_to_json(self.queue.reject(record_id, actor=actor))
