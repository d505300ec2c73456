"""
Embedding providers and the batch embedding operation.
"""

from typing import (
    List,
    Sequence
)
from finrag.embeddings.mixins import (
    EmbeddingsFn,
    Utils
)
from finrag.embeddings.mixins.sysget import (
    embedder_from_spec,
    get_embedding_function
)
from finrag.errors import ValidationError

def embed_batch(
    embedder: EmbeddingsFn,
    texts: Sequence[str],
    batch_size: int = 32,
    max_workers: int = 1
) -> List[List[float]]:
    """
    Embed a non-empty list of texts, one vector per text in input order.

    Args:
        embedder: Any embedding provider
        texts: Texts to embed; individual texts may be empty
        batch_size: Texts per provider call
        max_workers: Batches in flight at once

    Returns:
        List of vectors

    Raises:
        ValidationError: If texts is empty or contains non-strings
    """

    texts = list(texts)
    if not texts:
        raise ValidationError("embed_batch needs at least one text")
    if not all(isinstance(text, str) for text in texts):
        raise ValidationError("embed_batch only accepts strings")
    return embedder.embed_in_batches(texts, batch_size=batch_size, max_workers=max_workers)

__all__ = [
    "EmbeddingsFn",
    "Utils",
    "embed_batch",
    "embedder_from_spec",
    "get_embedding_function"
]
