"""
Ranked result types passed between retrieval stages.
"""

from dataclasses import (
    asdict,
    dataclass
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple
)
from finrag.errors import ValidationError

@dataclass(frozen=True)
class ScoredHit:
    """
    One entry of a first-stage result list.

    For keyword search the score is the BM25 score (higher is better); for
    vector search it is the squared L2 distance (lower is better).
    """

    chunk_ref: str
    score: float
    rank: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

@dataclass(frozen=True)
class FusedHit:
    chunk_ref: str
    rrf_score: float
    ranks: Tuple[Optional[int], ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chunk_ref": self.chunk_ref,
            "rrf_score": self.rrf_score,
            "ranks": list(self.ranks)
        }

@dataclass(frozen=True)
class RerankedHit:
    chunk_ref: str
    raw_score: float
    normalized_mass: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

RankedList = Sequence[ScoredHit]

def rank_hits(
    scored: Sequence[Tuple[str, float]]
) -> List[ScoredHit]:
    """
    Attach consecutive 1-based ranks to an already ordered (ref, score) list.
    """

    return [
        ScoredHit(chunk_ref=ref, score=float(score), rank=position)
        for position, (ref, score) in enumerate(scored, start=1)
    ]

def validate_ranked_list(
    hits: RankedList,
    position: int = 0
) -> None:
    """
    Check that a ranked list has unique refs and ranks 1..n in order.

    Args:
        hits: List to check
        position: Index of the list among its siblings, used in messages

    Raises:
        ValidationError: If a ref repeats or ranks are not consecutive from 1
    """

    seen = set()
    for expected, hit in enumerate(hits, start=1):
        if hit.chunk_ref in seen:
            raise ValidationError(
                f"ranked list {position} contains chunk '{hit.chunk_ref}' more than once"
            )
        if hit.rank != expected:
            raise ValidationError(
                f"ranked list {position} has rank {hit.rank} at position {expected}; "
                "ranks must be consecutive from 1"
            )
        seen.add(hit.chunk_ref)
