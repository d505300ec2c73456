"""
Cross-encoder reranking and adaptive cutoffs.
"""

from finrag.rerank.cutoffs import (
    apply_cutoffs,
    cliff_cutoff,
    cutoff_points,
    mass_cutoff
)
from finrag.rerank.mixins import RelevanceScorer
from finrag.rerank.mixins.sysget import (
    get_scorer,
    scorer_from_config
)
from finrag.rerank.overlap import (
    OverlapScorer,
    jaccard
)
from finrag.rerank.reranker import rerank_candidates

__all__ = [
    "OverlapScorer",
    "RelevanceScorer",
    "apply_cutoffs",
    "cliff_cutoff",
    "cutoff_points",
    "get_scorer",
    "jaccard",
    "mass_cutoff",
    "rerank_candidates",
    "scorer_from_config"
]
