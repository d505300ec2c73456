"""
Reciprocal Rank Fusion of several ranked lists.
"""

from typing import (
    Dict,
    List,
    Optional,
    Sequence
)
from finrag.config import FusionConfig
from finrag.hits import (
    FusedHit,
    RankedList,
    validate_ranked_list
)

def rrf_fuse(
    lists: Sequence[RankedList],
    cfg: Optional[FusionConfig] = None
) -> List[FusedHit]:
    """
    Fuse ranked lists by summing 1 / (k + rank) over the lists containing each chunk.

    A chunk absent from a list gets no term for that list.

    Args:
        lists: Ranked lists with unique refs and ranks 1..n
        cfg: Fusion constant k (default 60)

    Returns:
        Union of all refs ordered by descending fused score, ties by ascending ref.
        FusedHit.ranks holds the chunk's rank in each input list, None where absent.

    Raises:
        ValidationError: If an input list has a repeated ref or broken ranks
    """

    cfg = cfg or FusionConfig()
    for position, hits in enumerate(lists):
        validate_ranked_list(hits, position)

    ranks: Dict[str, List[Optional[int]]] = {}
    for position, hits in enumerate(lists):
        for hit in hits:
            ranks.setdefault(hit.chunk_ref, [None] * len(lists))[position] = hit.rank

    fused = []
    for ref, per_list in ranks.items():
        # sum in list order so equal rank tuples give bit-equal scores
        score = 0.0
        for rank in per_list:
            if rank is not None:
                score += 1.0 / (cfg.k + rank)
        fused.append(FusedHit(chunk_ref=ref, rrf_score=score, ranks=tuple(per_list)))
    fused.sort(key=lambda hit: (-hit.rrf_score, hit.chunk_ref))
    return fused
