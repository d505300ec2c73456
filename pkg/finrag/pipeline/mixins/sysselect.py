"""
Module containing the SysSelect class, which picks the context chunks from the fused list.
"""

from typing import List
from finrag.corpus import Chunk
from finrag.hits import FusedHit
from finrag.pipeline.mixins.utils import run_stage
from finrag.pipeline.trace import QueryTrace
from finrag.rerank import (
    apply_cutoffs,
    cutoff_points,
    rerank_candidates
)

class SysSelect:
    def _select_without_rerank(
        self,
        fused: List[FusedHit]
    ) -> List[Chunk]:
        top = fused[:self.cfg.no_rerank_context_limit]
        return self.corpus.get_chunks([hit.chunk_ref for hit in top])

    def _select_with_rerank(
        self,
        rerank_query: str,
        fused: List[FusedHit],
        trace: QueryTrace
    ) -> List[Chunk]:
        rerank_cfg = self.cfg.rerank
        candidates = self.corpus.get_chunks(
            [hit.chunk_ref for hit in fused[:rerank_cfg.max_candidates]]
        )
        trace.rerank_candidates = [chunk.chunk_id for chunk in candidates]
        if not candidates:
            return []

        def rerank():
            hits = rerank_candidates(self.scorer, rerank_query, candidates, rerank_cfg)
            return hits, cutoff_points(hits, rerank_cfg), apply_cutoffs(hits, rerank_cfg)

        hits, (by_mass, by_cliff), selected = run_stage("rerank", rerank)
        trace.reranked = hits
        trace.mass_cutoff = by_mass
        trace.cliff_cutoff = by_cliff
        return self.corpus.get_chunks([hit.chunk_ref for hit in selected])

    def select_context(
        self,
        rerank_query: str,
        fused: List[FusedHit],
        enable_rerank: bool,
        trace: QueryTrace
    ) -> List[Chunk]:
        """
        Context chunks in final ranking order.

        With reranking the top max_candidates fused chunks are scored and cut
        adaptively; without it the top no_rerank_context_limit fused chunks are kept.
        """

        if enable_rerank:
            return self._select_with_rerank(rerank_query, fused, trace)
        return self._select_without_rerank(fused)
