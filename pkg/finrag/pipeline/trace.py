"""
Module containing the QueryTrace class, the record of what every stage of one query consumed and produced.
"""

from dataclasses import (
    dataclass,
    field
)
from typing import (
    Any,
    Dict,
    List,
    Optional
)
from finrag.gateway import RewriteResult
from finrag.hits import (
    FusedHit,
    RerankedHit,
    ScoredHit
)

@dataclass
class QueryTrace:
    query: str
    enable_rerank: bool
    rewrite: Optional[RewriteResult] = None
    fts_hits: List[ScoredHit] = field(default_factory=list)
    semantic_hits: List[ScoredHit] = field(default_factory=list)
    fused: List[FusedHit] = field(default_factory=list)
    rerank_candidates: List[str] = field(default_factory=list)
    reranked: List[RerankedHit] = field(default_factory=list)
    mass_cutoff: Optional[int] = None
    cliff_cutoff: Optional[int] = None
    context_refs: List[str] = field(default_factory=list)
    answer: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """
        JSON-ready form; rerank fields are None when reranking is off.
        """

        return {
            "query": self.query,
            "enable_rerank": self.enable_rerank,
            "rewrite": self.rewrite.to_dict() if self.rewrite else None,
            "fts_hits": [hit.to_dict() for hit in self.fts_hits],
            "semantic_hits": [hit.to_dict() for hit in self.semantic_hits],
            "fused": [hit.to_dict() for hit in self.fused],
            "rerank": {
                "candidates": list(self.rerank_candidates),
                "scores": [hit.to_dict() for hit in self.reranked],
                "mass_cutoff": self.mass_cutoff,
                "cliff_cutoff": self.cliff_cutoff
            } if self.enable_rerank else None,
            "context_refs": list(self.context_refs),
            "answer": self.answer
        }
