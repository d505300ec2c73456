"""
Keyword index operations module.
"""

from finrag.fts.mixins.utils import (
    bm25_idf,
    bm25_term_score,
    query_terms
)
from finrag.fts.mixins.sysbuild import SysBuild
from finrag.fts.mixins.syssearch import SysSearch
from finrag.fts.mixins.sysstore import SysStore

__all__ = [
    "SysBuild",
    "SysSearch",
    "SysStore",
    "bm25_idf",
    "bm25_term_score",
    "query_terms"
]
