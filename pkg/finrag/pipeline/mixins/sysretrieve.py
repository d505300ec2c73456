"""
Module containing the SysRetrieve class, which runs rewriting, both first-stage searches and fusion.
"""

from typing import (
    List,
    Tuple
)
from finrag.fusion import rrf_fuse
from finrag.gateway import (
    RewriteResult,
    rewrite_query
)
from finrag.hits import (
    FusedHit,
    ScoredHit
)
from finrag.pipeline.mixins.utils import run_stage

class SysRetrieve:
    def _rewrite(
        self,
        query: str
    ) -> RewriteResult:
        return run_stage("rewrite", rewrite_query, self.gateways.rewriter, query)

    def _search_keywords(
        self,
        rewrite: RewriteResult
    ) -> List[ScoredHit]:
        return run_stage("fts", self.fts.search, list(rewrite.keywords), self.cfg.fts_top_k)

    def _search_semantic(
        self,
        rewrite: RewriteResult
    ) -> List[ScoredHit]:
        def search() -> List[ScoredHit]:
            vector = self.embedder.embed([rewrite.clarified_query])[0]
            return self.vectors.search(vector, self.cfg.semantic_top_k, self.cfg.distance_threshold)

        return run_stage("semantic", search)

    def retrieve(
        self,
        query: str
    ) -> Tuple[RewriteResult, List[ScoredHit], List[ScoredHit], List[FusedHit]]:
        """
        Rewrite the query, search both indexes and fuse the two ranked lists.

        Returns:
            (rewrite, keyword hits, semantic hits, fused list)
        """

        rewrite = self._rewrite(query)
        fts_hits = self._search_keywords(rewrite)
        semantic_hits = self._search_semantic(rewrite)
        fused = run_stage("fusion", rrf_fuse, [fts_hits, semantic_hits], self.cfg.fusion)
        return rewrite, fts_hits, semantic_hits, fused
