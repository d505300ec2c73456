"""
Finrag - Hybrid retrieval-augmented question answering over long financial reports.
"""

from finrag.config import (
    PipelineConfig,
    load_config
)
from finrag.corpus import (
    Chunk,
    Corpus,
    Document,
    chunk_text,
    ingest_corpus,
    ingest_jsonl
)
from finrag.embeddings import (
    embed_batch,
    get_embedding_function
)
from finrag.errors import FinragError
from finrag.fts import (
    FtsIndex,
    build_fts,
    search_fts
)
from finrag.fusion import rrf_fuse
from finrag.pipeline import (
    Engine,
    QueryTrace
)
from finrag.rerank import (
    apply_cutoffs,
    rerank_candidates
)
from finrag.vector import (
    VectorIndex,
    search_vectors
)

__version__ = "0.1.0"

__all__ = [
    "Chunk",
    "Corpus",
    "Document",
    "Engine",
    "FinragError",
    "FtsIndex",
    "PipelineConfig",
    "QueryTrace",
    "VectorIndex",
    "apply_cutoffs",
    "build_fts",
    "chunk_text",
    "embed_batch",
    "get_embedding_function",
    "ingest_corpus",
    "ingest_jsonl",
    "load_config",
    "rerank_candidates",
    "rrf_fuse",
    "search_fts",
    "search_vectors"
]
