"""
Module containing the EmbeddingsFn class, the base of every embedding provider.
"""

import math
from typing import (
    List,
    Optional,
    Sequence
)
from finrag.errors import (
    DimensionMismatchError,
    IntegrityError
)

class EmbeddingsFn:
    def __init__(
        self,
        dimension: Optional[int] = None
    ) -> None:
        """
        Initialize the EmbeddingsFn with an optional dimension.

        Args:
            dimension: Expected vector length. If None, it is taken from the first embedding
                and enforced from then on.
        """

        self._dimension = dimension

    def _get_embedding(
        self,
        text: str
    ) -> List[float]:
        """
        Get embedding for a single text.
        """

        raise NotImplementedError(
            f"{self.__class__.__name__} must implement `_get_embedding`."
        )

    def _embed_many(
        self,
        texts: List[str]
    ) -> List[List[float]]:
        """
        Embed several texts; providers with a batch endpoint override this.
        """

        return [self._get_embedding(text) for text in texts]

    def embed(
        self,
        texts: Sequence[str]
    ) -> List[List[float]]:
        """
        Generate embeddings for a list of texts.

        Args:
            texts: List of texts to embed

        Returns:
            One vector per text, in input order

        Raises:
            IntegrityError: If the provider returns the wrong count or non-finite values
            DimensionMismatchError: If a vector does not have the expected dimension
        """

        texts = list(texts)
        if not texts:
            return []
        vectors = [list(map(float, vector)) for vector in self._embed_many(texts)]
        return self._check_vectors(texts, vectors)

    def _check_vectors(
        self,
        texts: List[str],
        vectors: List[List[float]]
    ) -> List[List[float]]:
        if len(vectors) != len(texts):
            raise IntegrityError(
                f"{self.__class__.__name__} returned {len(vectors)} vectors for {len(texts)} texts"
            )
        for position, vector in enumerate(vectors):
            # cache the dimension from the first embedding
            if self._dimension is None:
                self._dimension = len(vector)
            if len(vector) != self._dimension:
                raise DimensionMismatchError(
                    f"{self.__class__.__name__} returned a {len(vector)}-dim vector, "
                    f"expected {self._dimension}"
                )
            if not all(math.isfinite(value) for value in vector):
                raise IntegrityError(f"embedding {position} contains non-finite values")
        return vectors

    def dimension(
        self
    ) -> Optional[int]:
        """
        Get the embedding dimension.

        Returns:
            None if no dimension was configured and nothing has been embedded yet.
        """

        return self._dimension

    def get_dimension(
        self
    ) -> int:
        """
        Get embedding dimension, generating a test embedding if needed.
        """

        if self._dimension is None:
            self.embed(["test"])
        return self._dimension
