"""
Module containing the SysQuery class, which is used to search the index for the nearest vectors.
"""

from typing import (
    List,
    Sequence
)
import numpy as np
from finrag.errors import ValidationError
from finrag.hits import (
    ScoredHit,
    rank_hits
)
from finrag.vector.mixins.utils import (
    DISTANCE_TOLERANCE,
    as_vector,
    squared_l2_distances
)

class SysQuery:
    def _ref_ranks(self) -> np.ndarray:
        """
        Position of every stored ref in ascending ref order, used as the tie-break key.
        """

        if self._ref_rank is None or len(self._ref_rank) != len(self.refs):
            order = sorted(range(len(self.refs)), key=self.refs.__getitem__)
            ranks = np.empty(len(self.refs), dtype=np.int64)
            ranks[order] = np.arange(len(self.refs))
            self._ref_rank = ranks
        return self._ref_rank

    def distances(
        self,
        query: Sequence[float]
    ) -> np.ndarray:
        """
        Squared L2 distance from query to every stored vector, in insertion order.
        """

        # compare at storage precision
        vector = as_vector(query, self.dim).astype(np.float32).astype(np.float64)
        if not self.refs:
            return np.empty(0, dtype=np.float64)
        return squared_l2_distances(self._matrix, vector)

    def search(
        self,
        query: Sequence[float],
        top_k: int,
        distance_threshold: float
    ) -> List[ScoredHit]:
        """
        Exact nearest-neighbor search.

        Args:
            query: Query vector of the index dimension
            top_k: Maximum number of hits
            distance_threshold: Largest squared distance kept (inclusive, within DISTANCE_TOLERANCE)

        Returns:
            Hits ranked by ascending distance, ties by ascending chunk ref;
            each score is the squared distance

        Raises:
            ValidationError: If top_k < 1 or the threshold is negative
            DimensionMismatchError: If the query dimension differs from the index
        """

        if top_k < 1:
            raise ValidationError(f"top_k must be >= 1, got {top_k}")
        if distance_threshold < 0:
            raise ValidationError(f"distance_threshold must be >= 0, got {distance_threshold}")

        distances = self.distances(query)
        # filter, then order, then truncate
        candidates = np.flatnonzero(distances <= distance_threshold + DISTANCE_TOLERANCE)
        if candidates.size == 0:
            return []
        ref_ranks = self._ref_ranks()
        order = np.lexsort((ref_ranks[candidates], distances[candidates]))
        selected = candidates[order][:top_k]
        return rank_hits([(self.refs[i], float(distances[i])) for i in selected])
