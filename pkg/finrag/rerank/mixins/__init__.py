from finrag.rerank.mixins.scorer import RelevanceScorer

__all__ = [
    "RelevanceScorer"
]
