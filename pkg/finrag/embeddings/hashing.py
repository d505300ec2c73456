"""
Deterministic offline embedding: hashed token frequencies, L2-normalized.
"""

import hashlib
from typing import List
import numpy as np
from finrag.config import constants as C
from finrag.embeddings.mixins import (
    EmbeddingsFn,
    Utils
)
from finrag.text import tokenize

# stands in for texts without tokens so they still get a unit vector
EMPTY_TEXT_TOKEN = "<empty>"

class HashingEmbedding(
    EmbeddingsFn,
    Utils
):
    def __init__(
        self,
        dimension: int = C.DEFAULT_EMBEDDING_DIM
    ):
        """
        Initialize the hashing embedder.

        Args:
            dimension: Number of hash buckets
        """

        super().__init__(dimension=dimension)
        self.model = f"hashing-{dimension}"

    def _bucket(
        self,
        token: str
    ) -> int:
        digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
        return int.from_bytes(digest, "little") % self._dimension

    def _get_embedding(
        self,
        text: str
    ) -> List[float]:
        vector = np.zeros(self._dimension, dtype=np.float64)
        for token in tokenize(text) or [EMPTY_TEXT_TOKEN]:
            vector[self._bucket(token)] += 1.0
        vector /= np.linalg.norm(vector)
        return vector.tolist()
