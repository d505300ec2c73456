"""
Exact vector search over chunk embeddings.
"""

from finrag.vector.mixins import squared_l2_distances
from finrag.vector.mixins.sysstore import (
    VECTOR_MAGIC,
    VECTOR_VERSION
)
from finrag.vector.vector_index import (
    VectorIndex,
    add_vectors,
    build_vector_index,
    search_vectors
)

__all__ = [
    "VECTOR_MAGIC",
    "VECTOR_VERSION",
    "VectorIndex",
    "add_vectors",
    "build_vector_index",
    "search_vectors",
    "squared_l2_distances"
]
