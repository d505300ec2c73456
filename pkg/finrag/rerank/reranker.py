"""
Module containing rerank_candidates, which scores fused candidates with a relevance scorer.
"""

import logging
import math
from typing import (
    List,
    Optional,
    Sequence
)
from finrag.config import RerankConfig
from finrag.corpus import Chunk
from finrag.errors import (
    IntegrityError,
    ValidationError
)
from finrag.hits import RerankedHit
from finrag.rerank.mixins import RelevanceScorer

logger = logging.getLogger(__name__)

def rerank_candidates(
    scorer: RelevanceScorer,
    query: str,
    candidates: Sequence[Chunk],
    cfg: Optional[RerankConfig] = None
) -> List[RerankedHit]:
    """
    Score candidates against the query and sort them.

    Args:
        scorer: Relevance scorer
        query: Query text
        candidates: Chunks to score, at most cfg.max_candidates
        cfg: Rerank settings; batch_size sets chunks per scorer call

    Returns:
        Hits sorted by descending raw score, ties by ascending chunk id.
        normalized_mass is raw_score over the sum of raw scores (0 when the sum is 0).

    Raises:
        ValidationError: If candidates is empty, too long, or repeats a chunk
        IntegrityError: If the scorer returns the wrong count or a score outside [0, 1]
    """

    cfg = cfg or RerankConfig()
    if not candidates:
        raise ValidationError("rerank needs at least one candidate")
    if len(candidates) > cfg.max_candidates:
        raise ValidationError(
            f"{len(candidates)} candidates exceed max_candidates={cfg.max_candidates}"
        )
    if len({chunk.chunk_id for chunk in candidates}) != len(candidates):
        raise ValidationError("rerank candidates must be distinct chunks")

    scores: List[float] = []
    for start in range(0, len(candidates), cfg.batch_size):
        batch = candidates[start:start + cfg.batch_size]
        batch_scores = scorer.score(query, [chunk.text for chunk in batch])
        if len(batch_scores) != len(batch):
            raise IntegrityError(
                f"scorer returned {len(batch_scores)} scores for {len(batch)} candidates"
            )
        scores.extend(batch_scores)

    for chunk, value in zip(candidates, scores):
        if not math.isfinite(value) or not 0.0 <= value <= 1.0:
            raise IntegrityError(
                f"relevance score {value} for chunk '{chunk.chunk_id}' is outside [0, 1]"
            )

    total = math.fsum(scores)
    hits = [
        RerankedHit(
            chunk_ref=chunk.chunk_id,
            raw_score=value,
            normalized_mass=value / total if total > 0 else 0.0
        )
        for chunk, value in zip(candidates, scores)
    ]
    hits.sort(key=lambda hit: (-hit.raw_score, hit.chunk_ref))
    logger.debug("reranked %d candidates with %s", len(hits), scorer.__class__.__name__)
    return hits
