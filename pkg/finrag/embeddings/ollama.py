"""
Ollama embedding provider.
"""

import threading
from typing import (
    List,
    Optional
)
import httpx
from finrag.embeddings.mixins import (
    EmbeddingsFn,
    Utils
)
from finrag.errors import IntegrityError
from finrag.transport import HttpJsonClient

class OllamaEmbedding(
    EmbeddingsFn,
    Utils
):
    def __init__(
        self,
        model: str = "mxbai-embed-large",
        base_url: str = "http://localhost:11434",
        timeout: float = 60.0,
        max_retries: int = 3,
        dimension: Optional[int] = None,
        limiter: Optional[threading.BoundedSemaphore] = None,
        transport: Optional[httpx.BaseTransport] = None
    ):
        """
        Initialize Ollama embedding function.

        Args:
            model: Name of the Ollama embedding model to use
            base_url: Base URL for Ollama API (default: http://localhost:11434)
        """

        super().__init__(dimension=dimension)
        self.model = model
        self.base_url = base_url.rstrip("/")
        self._client = HttpJsonClient(
            base_url=self.base_url,
            timeout=timeout,
            max_retries=max_retries,
            limiter=limiter,
            transport=transport
        )

    def _embed_many(
        self,
        texts: List[str]
    ) -> List[List[float]]:
        body = self._client.post_json("api/embed", {"model": self.model, "input": texts})
        embeddings = body.get("embeddings") if isinstance(body, dict) else None
        if embeddings is None:
            raise IntegrityError(
                f"No embeddings returned from Ollama. "
                f"Make sure model '{self.model}' is an embedding model."
            )
        return embeddings
