"""
Module containing the SysSearch class, which is used to rank chunks against keywords with BM25.
"""

import heapq
from typing import (
    Dict,
    List,
    Sequence
)
from finrag.errors import ValidationError
from finrag.fts.mixins.utils import (
    bm25_idf,
    bm25_term_score,
    query_terms
)
from finrag.hits import (
    ScoredHit,
    rank_hits
)

class SysSearch:
    def score_all(
        self,
        keywords: Sequence[str]
    ) -> Dict[str, float]:
        """
        Summed BM25 score of every chunk matching at least one keyword.

        Args:
            keywords: Keywords, OR semantics

        Returns:
            Mapping of chunk id to score, only chunks with a positive score
        """

        scores: Dict[str, float] = {}
        total_docs = self.total_docs
        avg_length = self.avg_doc_length
        k1, b = self.params.k1, self.params.b

        for term in query_terms(keywords):
            postings = self.postings.get(term)
            if not postings:
                continue
            idf = bm25_idf(total_docs, len(postings))
            for chunk_ref, freq in postings:
                contribution = bm25_term_score(
                    freq,
                    self.doc_lengths[chunk_ref],
                    avg_length,
                    idf,
                    k1,
                    b
                )
                scores[chunk_ref] = scores.get(chunk_ref, 0.0) + contribution
        return {ref: score for ref, score in scores.items() if score > 0.0}

    def search(
        self,
        keywords: Sequence[str],
        top_k: int
    ) -> List[ScoredHit]:
        """
        Top chunks by BM25 score.

        Args:
            keywords: Query keywords; an empty list returns no hits
            top_k: Maximum number of hits

        Returns:
            Hits ranked 1..n by descending score, ties broken by ascending chunk id

        Raises:
            ValidationError: If top_k is smaller than 1
        """

        if top_k < 1:
            raise ValidationError(f"top_k must be >= 1, got {top_k}")
        if not keywords:
            return []

        scores = self.score_all(keywords)
        best = heapq.nsmallest(top_k, scores.items(), key=lambda item: (-item[1], item[0]))
        return rank_hits(best)
