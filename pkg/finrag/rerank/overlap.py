"""
Deterministic local scorer: token Jaccard similarity.
"""

from typing import List
from finrag.rerank.mixins import RelevanceScorer
from finrag.text import tokenize

def jaccard(
    left: str,
    right: str
) -> float:
    """
    |A ∩ B| / |A ∪ B| over the token sets of two texts; 0 when both are empty.
    """

    a = set(tokenize(left))
    b = set(tokenize(right))
    union = a | b
    if not union:
        return 0.0
    return len(a & b) / len(union)

class OverlapScorer(RelevanceScorer):
    model = "token-jaccard"

    def _score(
        self,
        query: str,
        texts: List[str]
    ) -> List[float]:
        return [jaccard(query, text) for text in texts]
