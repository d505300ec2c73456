"""
Keyword index module.
"""

from finrag.fts.fts_index import (
    FtsIndex,
    build_fts,
    search_fts
)
from finrag.fts.mixins import (
    bm25_idf,
    bm25_term_score,
    query_terms
)

__all__ = [
    "FtsIndex",
    "bm25_idf",
    "bm25_term_score",
    "build_fts",
    "query_terms",
    "search_fts"
]
