"""Quadratic-time BM25 oracle: scores every chunk against the query directly,
with its own tokenizer, no inverted index."""

from __future__ import annotations

import math
import re

K1 = 1.2
B = 0.75


def _tokens(text: str) -> list[str]:
    return re.findall(r"[a-z0-9]+", text.lower())


def reference_search(
    chunks: list[tuple[str, int, str]],  # (doc_id, chunk_index, text)
    query: str,
    k: int = 10,
) -> list[tuple[str, int, float]]:
    n = len(chunks)
    if n == 0:
        return []
    token_lists = [_tokens(text) for _, _, text in chunks]
    avg_len = sum(len(t) for t in token_lists) / n

    terms = sorted(set(_tokens(query)))
    results = []
    for (doc_id, chunk_index, _), tokens in zip(chunks, token_lists):
        score = 0.0
        for term in terms:
            tf = tokens.count(term)
            if tf == 0:
                continue
            df = sum(1 for other in token_lists if term in other)
            idf = math.log(1 + (n - df + 0.5) / (df + 0.5))
            score += idf * tf * (K1 + 1) / (tf + K1 * (1 - B + B * len(tokens) / avg_len))
        if score > 0.0:
            results.append((doc_id, chunk_index, score))
    results.sort(key=lambda r: (-r[2], r[0], r[1]))
    return results[:k]
