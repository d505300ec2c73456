"""
OpenAI-compatible embedding provider over HTTP.
"""

import threading
from typing import (
    Any,
    Dict,
    List,
    Optional
)
import httpx
from finrag.config import (
    constants as C,
    resolve_secret
)
from finrag.embeddings.mixins import (
    EmbeddingsFn,
    Utils
)
from finrag.errors import (
    ConfigurationError,
    IntegrityError
)
from finrag.transport import HttpJsonClient

class OpenAIEmbedding(
    EmbeddingsFn,
    Utils
):
    def __init__(
        self,
        api_key: Optional[str] = None,
        model: str = C.DEFAULT_EMBEDDING_MODEL,
        base_url: Optional[str] = None,
        timeout: float = C.DEFAULT_TIMEOUT_SECONDS,
        max_retries: int = C.DEFAULT_MAX_RETRIES,
        dimension: Optional[int] = C.DEFAULT_EMBEDDING_DIM,
        limiter: Optional[threading.BoundedSemaphore] = None,
        transport: Optional[httpx.BaseTransport] = None
    ):
        """
        Initialize OpenAI embedding function.

        Args:
            api_key: API key. If not provided, FINRAG_OPENAI_API_KEY or OPENAI_API_KEY is used.
            model: Embedding model.
            base_url: Optional custom OpenAI-compatible base URL.
            timeout: Request timeout in seconds.
            max_retries: Retry budget per request.
            dimension: Requested output dimension, sent as `dimensions`.
            limiter: Shared concurrency bound.
            transport: httpx transport override.
        """

        super().__init__(dimension=dimension)
        self.api_key = api_key or resolve_secret(C.OPENAI_KEY_ENV)
        if not self.api_key:
            raise ConfigurationError(
                "OpenAI API key is required. Provide `api_key` or set OPENAI_API_KEY."
            )
        self.model = model
        self._client = HttpJsonClient(
            base_url=base_url or C.DEFAULT_OPENAI_BASE_URL,
            api_key=self.api_key,
            timeout=timeout,
            max_retries=max_retries,
            limiter=limiter,
            transport=transport
        )

    def _embed_many(
        self,
        texts: List[str]
    ) -> List[List[float]]:
        """
        Generate embeddings for a list of texts with one API call.
        """

        payload: Dict[str, Any] = {
            "model": self.model,
            "input": texts
        }
        if self._dimension is not None:
            payload["dimensions"] = self._dimension
        body = self._client.post_json("embeddings", payload)
        try:
            items = sorted(body["data"], key=lambda item: item["index"])
            return [list(item["embedding"]) for item in items]
        except (KeyError, TypeError) as exc:
            raise IntegrityError(f"unexpected embeddings response shape: {exc}") from exc
