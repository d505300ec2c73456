"""
Mixins for embedding providers.
"""

from finrag.embeddings.mixins.embeddings_fn import EmbeddingsFn
from finrag.embeddings.mixins.utils import Utils

__all__ = [
    "EmbeddingsFn",
    "Utils"
]
