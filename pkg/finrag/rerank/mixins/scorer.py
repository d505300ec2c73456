"""
Module containing the RelevanceScorer class, the base of every reranker scorer.
"""

from typing import (
    List,
    Sequence
)

class RelevanceScorer:
    """
    Scores (query, passage) pairs with relevance in [0, 1].
    """

    model = "unknown"

    def _score(
        self,
        query: str,
        texts: List[str]
    ) -> List[float]:
        raise NotImplementedError(
            f"{self.__class__.__name__} must implement `_score`."
        )

    def score(
        self,
        query: str,
        texts: Sequence[str]
    ) -> List[float]:
        """
        Score every text against the query.

        Args:
            query: Query text
            texts: Candidate passages

        Returns:
            One score per text, in input order
        """

        texts = list(texts)
        if not texts:
            return []
        return [float(value) for value in self._score(query, texts)]

    def __call__(
        self,
        query: str,
        texts: Sequence[str]
    ) -> List[float]:
        return self.score(query, texts)
