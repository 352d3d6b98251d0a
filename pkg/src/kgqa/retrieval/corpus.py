"""Corpus ingestion and index caching.

Corpus files are line-delimited JSON records {"id", "title", "text"}. The
built index can be pickled next to the corpus keyed by a content hash; a
stale cache is rebuilt silently.
"""

from __future__ import annotations

import hashlib
import json
import pickle
from pathlib import Path
from typing import IO

from kgqa.errors import MalformedCorpus
from kgqa.kg.triples import Triple
from kgqa.retrieval.bm25 import Bm25Index, build_index
from kgqa.retrieval.chunking import DEFAULT_CHUNK_SIZE, Chunk, Document, chunk_document

_CACHE_MAGIC = "kgqa-bm25-cache-v1"


def load_corpus(source: bytes | str | IO[bytes]) -> list[Document]:
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read().decode("utf-8")

    docs: list[Document] = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedCorpus(lineno, f"invalid record: {exc.msg}") from exc
        if not isinstance(record, dict):
            raise MalformedCorpus(lineno, "record is not an object")
        doc_id = str(record.get("id", ""))
        body = str(record.get("text", ""))
        if not doc_id:
            raise MalformedCorpus(lineno, "document id is empty")
        if doc_id in seen:
            raise MalformedCorpus(lineno, f"duplicate document id {doc_id!r}")
        if not body:
            raise MalformedCorpus(lineno, "document text is empty")
        seen.add(doc_id)
        docs.append(Document(id=doc_id, title=str(record.get("title", "")), text=body))
    return docs


def chunk_corpus(docs: list[Document], size: int = DEFAULT_CHUNK_SIZE) -> list[Chunk]:
    chunks: list[Chunk] = []
    for doc in docs:
        chunks.extend(chunk_document(doc, size=size))
    return chunks


def corpus_hash(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def save_index_cache(index: Bm25Index, path: Path, content_hash: str) -> None:
    payload = {"magic": _CACHE_MAGIC, "hash": content_hash, "index": index}
    path.write_bytes(pickle.dumps(payload))


def load_index_cache(path: Path, content_hash: str) -> Bm25Index | None:
    try:
        payload = pickle.loads(path.read_bytes())
    except (OSError, pickle.UnpicklingError, EOFError, AttributeError):
        return None
    if not isinstance(payload, dict) or payload.get("magic") != _CACHE_MAGIC:
        return None
    if payload.get("hash") != content_hash:
        return None
    index = payload.get("index")
    return index if isinstance(index, Bm25Index) else None


def load_or_build_index(
    corpus_path: Path,
    cache_path: Path | None = None,
    size: int = DEFAULT_CHUNK_SIZE,
) -> Bm25Index:
    data = corpus_path.read_bytes()
    digest = corpus_hash(data)
    if cache_path is not None and cache_path.exists():
        cached = load_index_cache(cache_path, digest)
        if cached is not None:
            return cached
    index = build_index(chunk_corpus(load_corpus(data), size=size))
    if cache_path is not None:
        save_index_cache(index, cache_path, digest)
    return index


def make_verification_query(triples: list[Triple], question: str) -> str:
    """Known slots of the triples in input order, then the question."""
    if not triples:
        raise ValueError("verification query needs at least one triple")
    words = [slot for t in triples for slot in t.slots if slot is not None]
    return " ".join(words) + " " + question
