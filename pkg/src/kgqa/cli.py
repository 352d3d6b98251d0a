"""Operator command line: serve the API, ask questions, manage graph/corpus/queue, run evaluations.

The CLI embeds the engine in-process, so everything here works without a
running server; `serve` starts the same engine behind HTTP. Values for
--kg/--corpus/--script accept either a path or a packaged fixture alias
("fixture", "demo", "synthetic20").
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from kgqa.config import Config, fixture_path, load_config, resolve_source
from kgqa.engine import Engine
from kgqa.errors import KgqaError
from kgqa.evaluation.harness import ScenarioMode, emit_report, load_items, run_scenario
from kgqa.kg.store import KnowledgeGraph
from kgqa.kg.triples import parse_triple_line
from kgqa.retrieval.bm25 import build_index
from kgqa.retrieval.corpus import chunk_corpus, corpus_hash, load_corpus, save_index_cache

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--kg", help="knowledge graph file or alias")
    parser.add_argument("--corpus", help="retrieval corpus file or alias")
    parser.add_argument("--script", help="scripted model responses file or alias")
    parser.add_argument("--remote", help="remote chat endpoint URL", dest="remote_url")
    parser.add_argument("--log", help="queue event log path", dest="event_log")
    parser.add_argument("--format", choices=("text", "records"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgqa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    _common_flags(p)
    p.add_argument("--host")
    p.add_argument("--port", type=int)

    p = sub.add_parser("ask", help="answer one question through the agent")
    _common_flags(p)
    p.add_argument("question")
    p.add_argument("--trace", action="store_true", help="print the full thought/action/observation trace")

    p = sub.add_parser("kg", help="knowledge graph maintenance")
    kg_sub = p.add_subparsers(dest="kg_command", required=True)
    for name, extra in (
        ("load", [("path", {})]),
        ("stats", []),
        ("add", [("triple", {"help": 'fact as "(subject; predicate; object)"'}), ("--out", {})]),
        ("export", [("--out", {"required": True})]),
    ):
        q = kg_sub.add_parser(name)
        _common_flags(q)
        for arg, kwargs in extra:
            q.add_argument(arg, **kwargs)

    p = sub.add_parser("corpus", help="retrieval corpus maintenance")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    q = corpus_sub.add_parser("ingest")
    _common_flags(q)
    q = corpus_sub.add_parser("index")
    _common_flags(q)
    q.add_argument("--cache", required=True, help="index cache output path")

    p = sub.add_parser("queue", help="pending knowledge review")
    queue_sub = p.add_subparsers(dest="queue_command", required=True)
    q = queue_sub.add_parser("list")
    _common_flags(q)
    q.add_argument("--status")
    for name in ("show", "accept", "verify", "reject"):
        q = queue_sub.add_parser(name)
        _common_flags(q)
        q.add_argument("record_id")
    q = queue_sub.add_parser("edit")
    _common_flags(q)
    q.add_argument("record_id")
    q.add_argument("--triples", nargs="+", required=True, help='replacement facts "(s; p; o)"')

    p = sub.add_parser("eval", help="run the three-scenario comparison")
    eval_sub = p.add_subparsers(dest="eval_command", required=True)
    q = eval_sub.add_parser("run")
    _common_flags(q)
    q.add_argument("--mode", choices=("direct", "without_knowledge", "updated", "all"), default="all")
    q.add_argument("--fixture", required=True, help="eval items file or alias")
    return parser


def _config_from_args(args: argparse.Namespace) -> Config:
    overrides = {
        name: getattr(args, name, None)
        for name in ("kg", "corpus", "script", "remote_url", "event_log", "host", "port")
    }
    return load_config(getattr(args, "config", None), overrides=overrides)


def _emit(args: argparse.Namespace, payload: dict | list, text: str) -> None:
    if args.format == "records":
        rows = payload if isinstance(payload, list) else [payload]
        for row in rows:
            print(json.dumps(row, ensure_ascii=False))
    else:
        print(text)


def _render_trace(steps: list[dict]) -> str:
    lines = []
    for step in steps:
        if step["type"] == "action":
            lines.append(f"Action[{step['tool']}]: {step['text']}")
        elif step["type"] == "final":
            lines.append(f"Answer: {step['text']}")
        else:
            lines.append(f"{step['type'].capitalize()}: {step['text']}")
    return "\n".join(lines)


def _cmd_ask(args: argparse.Namespace) -> int:
    engine = Engine.from_config(_config_from_args(args))
    trace = engine.ask(args.question)
    if args.format == "records":
        print(json.dumps(trace, ensure_ascii=False))
    elif args.trace:
        print(_render_trace(trace["steps"]))
        print(f"(route: {trace['route']})")
    else:
        print(trace["final_answer"])
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from kgqa.service.app import create_app

    cfg = _config_from_args(args)
    engine = Engine.from_config(cfg)
    app = create_app(engine, cors_origin=cfg.cors_origin, ask_timeout=cfg.ask_timeout)
    uvicorn.run(app, host=cfg.host, port=cfg.port)
    return EXIT_OK


def _load_kg_arg(args: argparse.Namespace, attr: str = "kg") -> tuple[KnowledgeGraph, Path]:
    value = getattr(args, attr, None)
    if not value:
        raise KgqaError("no knowledge graph given (use --kg)")
    path = resolve_source("kg", value)
    return KnowledgeGraph.load(path.read_bytes()), path


def _cmd_kg(args: argparse.Namespace) -> int:
    if args.kg_command == "load":
        kg = KnowledgeGraph.load(Path(args.path).read_bytes())
        stats = kg.stats()
        _emit(args, stats, f"loaded: {stats['entities']} entities, {stats['edges']} edges, {stats['attributes']} attributes")
        return EXIT_OK
    if args.kg_command == "stats":
        kg, _ = _load_kg_arg(args)
        stats = kg.stats()
        _emit(args, stats, f"{stats['entities']} entities, {stats['edges']} edges, {stats['attributes']} attributes")
        return EXIT_OK
    if args.kg_command == "add":
        kg, path = _load_kg_arg(args)
        triple = parse_triple_line(args.triple)
        if triple is None:
            raise KgqaError(f'not a triple: {args.triple!r} (expected "(s; p; o)")')
        outcome = kg.add_triple(triple)
        out = Path(args.out) if args.out else path
        if out == fixture_path("kg", args.kg or ""):
            raise KgqaError("refusing to overwrite the packaged fixture; pass --out")
        out.write_bytes(kg.snapshot())
        _emit(args, {"outcome": outcome.value, "path": str(out)}, f"{outcome.value} -> {out}")
        return EXIT_OK
    # export
    kg, _ = _load_kg_arg(args)
    Path(args.out).write_bytes(kg.snapshot())
    _emit(args, {"path": args.out}, f"exported -> {args.out}")
    return EXIT_OK


def _cmd_corpus(args: argparse.Namespace) -> int:
    if not args.corpus:
        raise KgqaError("no corpus given (use --corpus)")
    path = resolve_source("corpus", args.corpus)
    data = path.read_bytes()
    docs = load_corpus(data)
    chunks = chunk_corpus(docs)
    if args.corpus_command == "ingest":
        payload = {"documents": len(docs), "chunks": len(chunks)}
        _emit(args, payload, f"{len(docs)} documents, {len(chunks)} chunks")
        return EXIT_OK
    index = build_index(chunks)
    save_index_cache(index, Path(args.cache), corpus_hash(data))
    _emit(args, {"chunks": index.n_chunks, "cache": args.cache}, f"indexed {index.n_chunks} chunks -> {args.cache}")
    return EXIT_OK


def _record_text(record: dict) -> str:
    return f"{record['id']}  [{record['status']}]  {record['question']}"


def _cmd_queue(args: argparse.Namespace) -> int:
    engine = Engine.from_config(_config_from_args(args))
    command = args.queue_command
    if command == "list":
        records = engine.list_pending(args.status)
        _emit(args, records, "\n".join(_record_text(r) for r in records) or "(queue empty)")
        return EXIT_OK
    if command == "show":
        record = engine.get_pending(args.record_id)
        _emit(args, record, json.dumps(record, indent=2, ensure_ascii=False))
        return EXIT_OK
    if command == "accept":
        result = engine.accept(args.record_id, actor="cli")
        # persist the graph change when the source is a plain file
        kg_value = getattr(args, "kg", None)
        if kg_value:
            path = resolve_source("kg", kg_value)
            if path != fixture_path("kg", kg_value):
                path.write_bytes(engine.kg.snapshot())
        _emit(args, result, f"accepted {args.record_id}: {', '.join(result['outcomes'])}")
        return EXIT_OK
    if command == "verify":
        record = engine.verify(args.record_id, actor="cli")
        _emit(args, record, f"verified {args.record_id}: {len(record['evidence'])} evidence chunk(s)")
        return EXIT_OK
    if command == "reject":
        record = engine.reject(args.record_id, actor="cli")
        _emit(args, record, f"rejected {args.record_id}")
        return EXIT_OK
    # edit
    triples = []
    for raw in args.triples:
        triple = parse_triple_line(raw)
        if triple is None:
            raise KgqaError(f"not a triple: {raw!r}")
        triples.append(triple)
    record = engine.edit(args.record_id, triples, actor="cli")
    _emit(args, record, f"edited {args.record_id}")
    return EXIT_OK


def _cmd_eval(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    engine = Engine.from_config(cfg)
    fixture = resolve_source("eval", args.fixture)
    items = load_items(fixture.read_bytes())
    modes = (
        [ScenarioMode(args.mode)]
        if args.mode != "all"
        else [ScenarioMode.DIRECT, ScenarioMode.WITHOUT_KNOWLEDGE, ScenarioMode.UPDATED]
    )
    reports = [
        run_scenario(items, mode, engine.kg, engine.gateway, clock=engine.clock) for mode in modes
    ]
    fmt = "records" if args.format == "records" else "table"
    sys.stdout.write(emit_report(reports, fmt).decode("utf-8"))
    return EXIT_OK


_COMMANDS = {
    "serve": _cmd_serve,
    "ask": _cmd_ask,
    "kg": _cmd_kg,
    "corpus": _cmd_corpus,
    "queue": _cmd_queue,
    "eval": _cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except KgqaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entrypoint() -> None:  # console script target
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
