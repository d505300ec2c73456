"""
Corpus module: ingestion, chunking and the chunk store.
"""

from finrag.corpus.chunking import (
    chunk_text,
    make_chunk_id,
    merge_chunks
)
from finrag.corpus.corpus import (
    Corpus,
    ingest_corpus,
    ingest_jsonl
)
from finrag.corpus.types import (
    Chunk,
    Document
)

__all__ = [
    "Chunk",
    "Corpus",
    "Document",
    "chunk_text",
    "ingest_corpus",
    "ingest_jsonl",
    "make_chunk_id",
    "merge_chunks"
]
