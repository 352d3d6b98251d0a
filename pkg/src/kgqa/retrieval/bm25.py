"""Inverted-index BM25 scoring over token chunks.

Scoring uses the non-negative idf variant ln(1 + (N - df + 0.5) / (df + 0.5))
with k1=1.2, b=0.75; query terms are deduplicated before scoring. The index
is immutable once built, so concurrent searches need no locking.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from kgqa.retrieval.chunking import Chunk, tokenize

DEFAULT_K1 = 1.2
DEFAULT_B = 0.75
DEFAULT_TOP_K = 10


@dataclass(frozen=True)
class SearchHit:
    chunk: Chunk
    score: float


@dataclass(frozen=True)
class Bm25Index:
    chunks: tuple[Chunk, ...]
    postings: dict[str, list[tuple[int, int]]] = field(repr=False)
    doc_freq: dict[str, int] = field(repr=False)
    chunk_lengths: tuple[int, ...] = field(repr=False)
    avg_len: float = 0.0
    k1: float = DEFAULT_K1
    b: float = DEFAULT_B

    @property
    def n_chunks(self) -> int:
        return len(self.chunks)


def build_index(chunks: list[Chunk], k1: float = DEFAULT_K1, b: float = DEFAULT_B) -> Bm25Index:
    postings: dict[str, list[tuple[int, int]]] = {}
    doc_freq: dict[str, int] = {}
    lengths = []
    for idx, chunk in enumerate(chunks):
        tokens = tokenize(chunk.text)
        lengths.append(len(tokens))
        for term, tf in sorted(Counter(tokens).items()):
            postings.setdefault(term, []).append((idx, tf))
            doc_freq[term] = doc_freq.get(term, 0) + 1
    avg_len = sum(lengths) / len(lengths) if lengths else 0.0
    return Bm25Index(
        chunks=tuple(chunks),
        postings=postings,
        doc_freq=doc_freq,
        chunk_lengths=tuple(lengths),
        avg_len=avg_len,
        k1=k1,
        b=b,
    )


def search(index: Bm25Index, query: str, k: int = DEFAULT_TOP_K) -> list[SearchHit]:
    """Top-k hits in non-increasing score order, ties broken by
    (doc_id, chunk_index); zero-score chunks are excluded."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if index.n_chunks == 0:
        return []
    n = index.n_chunks
    scores: dict[int, float] = {}
    for term in sorted(set(tokenize(query))):
        plist = index.postings.get(term)
        if not plist:
            continue
        df = index.doc_freq[term]
        idf = math.log(1 + (n - df + 0.5) / (df + 0.5))
        for chunk_idx, tf in plist:
            norm = index.k1 * (1 - index.b + index.b * index.chunk_lengths[chunk_idx] / index.avg_len)
            scores[chunk_idx] = scores.get(chunk_idx, 0.0) + idf * tf * (index.k1 + 1) / (tf + norm)
    hits = [
        SearchHit(chunk=index.chunks[i], score=s)
        for i, s in scores.items()
        if s > 0.0
    ]
    hits.sort(key=lambda h: (-h.score, h.chunk.doc_id, h.chunk.chunk_index))
    return hits[:k]
