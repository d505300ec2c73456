"""
Local cross-encoder scorer built on sentence-transformers.
"""

from typing import (
    List,
    Optional
)
from finrag.config import constants as C
from finrag.errors import ConfigurationError
from finrag.rerank.mixins import RelevanceScorer

class CrossEncoderScorer(RelevanceScorer):
    def __init__(
        self,
        model: str = C.DEFAULT_RERANK_MODEL,
        device: Optional[str] = None,
        batch_size: int = 32
    ):
        """
        Load a cross-encoder. Single-label models emit sigmoid scores in [0, 1].

        Args:
            model: Hugging Face model id, e.g. jinaai/jina-reranker-v2-base-multilingual
            device: Optional device override
            batch_size: Pairs per forward pass
        """

        try:
            from sentence_transformers import CrossEncoder
        except ImportError as exc:
            raise ConfigurationError(
                "The cross-encoder scorer requires the `sentence-transformers` package. "
                "Install it with `pip install sentence-transformers`."
            ) from exc
        self.model = model
        self.batch_size = batch_size
        self._model = CrossEncoder(model, device=device, trust_remote_code=True)

    def _score(
        self,
        query: str,
        texts: List[str]
    ) -> List[float]:
        scores = self._model.predict(
            [(query, text) for text in texts],
            batch_size=self.batch_size,
            convert_to_numpy=True,
            show_progress_bar=False
        )
        return [float(value) for value in scores]
