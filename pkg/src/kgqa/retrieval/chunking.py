"""Tokenization and fixed-size chunking of corpus documents."""

from __future__ import annotations

import re
from dataclasses import dataclass

_TOKEN = re.compile(r"[a-z0-9]+")

DEFAULT_CHUNK_SIZE = 256


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    text: str


@dataclass(frozen=True)
class Chunk:
    doc_id: str
    chunk_index: int
    text: str
    token_count: int


def tokenize(text: str) -> list[str]:
    """Lowercase, then split on every maximal run of non-alphanumerics."""
    return _TOKEN.findall(text.lower())


def chunk_document(doc: Document, size: int = DEFAULT_CHUNK_SIZE) -> list[Chunk]:
    """Split a document into consecutive chunks of `size` tokens.

    Every chunk except possibly the last holds exactly `size` tokens; chunk
    text is the single-space join of its tokens, so tokenizing the chunks
    reproduces the document's token stream exactly.
    """
    if size < 1:
        raise ValueError("chunk size must be >= 1")
    tokens = tokenize(doc.text)
    chunks = []
    for i in range(0, len(tokens), size):
        window = tokens[i : i + size]
        chunks.append(
            Chunk(
                doc_id=doc.id,
                chunk_index=i // size,
                text=" ".join(window),
                token_count=len(window),
            )
        )
    return chunks
