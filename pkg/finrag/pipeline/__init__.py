"""
End-to-end query pipeline.
"""

from typing import Tuple
from finrag.pipeline.artifacts import (
    FTS_FILE,
    VECTOR_FILE,
    build_indexes,
    load_indexes,
    save_indexes
)
from finrag.pipeline.engine import Engine
from finrag.pipeline.mixins import STAGES
from finrag.pipeline.trace import QueryTrace

def answer_query(
    engine: Engine,
    query: str,
    enable_rerank: bool = True
) -> Tuple[str, QueryTrace]:
    return engine.answer_query(query, enable_rerank)

__all__ = [
    "Engine",
    "FTS_FILE",
    "QueryTrace",
    "STAGES",
    "VECTOR_FILE",
    "answer_query",
    "build_indexes",
    "load_indexes",
    "save_indexes"
]
