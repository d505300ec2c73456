"""
Module containing the VectorIndex class, an exact flat nearest-neighbor index over chunk embeddings.
"""

import logging
from typing import (
    Dict,
    List,
    Optional,
    Sequence,
    Tuple
)
import numpy as np
from finrag.config import EmbedderSpec
from finrag.corpus import Corpus
from finrag.embeddings import (
    EmbeddingsFn,
    embed_batch
)
from finrag.errors import ValidationError
from finrag.hits import ScoredHit
from finrag.vector.mixins import (
    SysAdd,
    SysQuery,
    SysStore
)

logger = logging.getLogger(__name__)

class VectorIndex(
    SysAdd,
    SysQuery,
    SysStore
):
    def __init__(
        self,
        dim: int
    ):
        """
        Initialize an empty index.

        Args:
            dim: Dimension shared by every stored vector
        """

        if dim < 1:
            raise ValidationError(f"dim must be >= 1, got {dim}")
        self.dim = dim
        self.refs: List[str] = []
        self._positions: Dict[str, int] = {}
        self._matrix = np.empty((0, dim), dtype=np.float32)
        self._ref_rank: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return len(self.refs)

    def __contains__(self, ref: object) -> bool:
        return ref in self._positions

    def __repr__(self) -> str:
        return f"VectorIndex(dim={self.dim}, size={len(self.refs)})"

def add_vectors(
    index: VectorIndex,
    pairs: Sequence[Tuple[str, Sequence[float]]]
) -> VectorIndex:
    return index.add_vectors(pairs)

def search_vectors(
    index: VectorIndex,
    query: Sequence[float],
    top_k: int,
    distance_threshold: float
) -> List[ScoredHit]:
    return index.search(query, top_k, distance_threshold)

def build_vector_index(
    corpus: Corpus,
    embedder: EmbeddingsFn,
    spec: Optional[EmbedderSpec] = None,
    max_workers: int = 1
) -> VectorIndex:
    """
    Embed every chunk of a corpus and index the vectors.

    Args:
        corpus: Corpus to embed
        embedder: Embedding provider producing spec.dim vectors
        spec: Dimension and batch size; defaults to EmbedderSpec()
        max_workers: Embedding batches in flight at once

    Returns:
        The built index
    """

    spec = spec or EmbedderSpec()
    index = VectorIndex(dim=spec.dim)
    chunks = list(corpus.chunks)
    if chunks:
        vectors = embed_batch(
            embedder,
            [chunk.text for chunk in chunks],
            batch_size=spec.batch_size,
            max_workers=max_workers
        )
        index.add_vectors([(chunk.chunk_id, vector) for chunk, vector in zip(chunks, vectors)])
    logger.info("built vector index: %d vectors of dim %d", len(index), index.dim)
    return index
