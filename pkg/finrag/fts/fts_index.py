"""
In-process inverted index with BM25 ranking over chunks.
"""

import logging
from typing import (
    Dict,
    List,
    Optional,
    Sequence,
    Tuple
)
from finrag.config import Bm25Params
from finrag.corpus import Corpus
from finrag.fts.mixins import (
    SysBuild,
    SysSearch,
    SysStore
)
from finrag.hits import ScoredHit

logger = logging.getLogger(__name__)

class FtsIndex(
    SysBuild,
    SysSearch,
    SysStore
):
    """
    Term -> (chunk id, term frequency) postings plus per-chunk token counts.
    """

    def __init__(
        self,
        params: Optional[Bm25Params] = None
    ):
        """
        Initialize an empty index.

        Args:
            params: BM25 k1 and b; defaults to k1=1.2, b=0.75
        """

        self.params = params or Bm25Params()
        self.postings: Dict[str, List[Tuple[str, int]]] = {}
        self.doc_lengths: Dict[str, int] = {}
        self._total_length = 0

    def __len__(self) -> int:
        return self.total_docs

    def statistics(self) -> Dict[str, float]:
        return {
            "total_docs": self.total_docs,
            "avg_doc_length": self.avg_doc_length,
            "vocabulary": len(self.postings)
        }

def build_fts(
    corpus: Corpus,
    params: Optional[Bm25Params] = None
) -> FtsIndex:
    """
    Index every chunk of a corpus.

    Args:
        corpus: Corpus to index; may be empty
        params: BM25 parameters

    Returns:
        The built index
    """

    index = FtsIndex(params=params)
    index.add_chunks(corpus.chunks)
    logger.info(
        "built keyword index: %d chunks, %d terms",
        index.total_docs,
        len(index.postings)
    )
    return index

def search_fts(
    index: FtsIndex,
    keywords: Sequence[str],
    top_k: int
) -> List[ScoredHit]:
    """
    Rank chunks by summed BM25 score over the keywords.
    """

    return index.search(keywords, top_k)
