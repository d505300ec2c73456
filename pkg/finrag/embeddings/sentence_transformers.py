"""
Sentence Transformers embedding provider running locally.
"""

from typing import (
    Any,
    Dict,
    List,
    Optional
)
from finrag.embeddings.mixins import (
    EmbeddingsFn,
    Utils
)
from finrag.errors import ConfigurationError

class SentenceTransformerEmbedding(
    EmbeddingsFn,
    Utils
):
    def __init__(
        self,
        model: str = "all-MiniLM-L6-v2",
        device: Optional[str] = None,
        normalize_embeddings: bool = True,
        dimension: Optional[int] = None
    ):
        """
        Initialize Sentence Transformers embedding function.

        Args:
            model: Sentence Transformers model name.
            device: Optional device override (e.g. cpu, cuda).
            normalize_embeddings: Whether to return unit-length embeddings.
            dimension: Truncate embeddings to this size (Matryoshka models).
        """

        super().__init__(dimension=dimension)
        self.model = model
        self.device = device
        self.normalize_embeddings = normalize_embeddings

        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise ConfigurationError(
                "Sentence Transformers embedding provider requires the "
                "`sentence-transformers` package. Install it with "
                "`pip install sentence-transformers`."
            ) from exc
        model_kwargs: Dict[str, Any] = {}
        if self.device:
            model_kwargs["device"] = self.device
        if dimension is not None:
            model_kwargs["truncate_dim"] = dimension
        self._model = SentenceTransformer(self.model, **model_kwargs)

    def _embed_many(
        self,
        texts: List[str]
    ) -> List[List[float]]:
        vectors = self._model.encode(
            texts,
            convert_to_numpy=True,
            normalize_embeddings=self.normalize_embeddings
        )
        return [vector.tolist() for vector in vectors]
