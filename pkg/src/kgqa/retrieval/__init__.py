"""Corpus chunking, BM25 indexing, and evidence search."""

from kgqa.retrieval.bm25 import Bm25Index, SearchHit, build_index, search
from kgqa.retrieval.chunking import Chunk, Document, chunk_document, tokenize
from kgqa.retrieval.corpus import (
    load_corpus,
    load_or_build_index,
    make_verification_query,
)

__all__ = [
    "Bm25Index",
    "Chunk",
    "Document",
    "SearchHit",
    "build_index",
    "chunk_document",
    "load_corpus",
    "load_or_build_index",
    "make_verification_query",
    "search",
    "tokenize",
]
