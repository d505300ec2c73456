"""
Hosted cross-encoder reranker over HTTP.

Request body: {"model", "query", "documents"}. Two response shapes are read:
{"scores": [...]} in input order, or {"results": [{"index", "relevance_score"}, ...]}
in any order.
"""

import threading
from typing import (
    Any,
    List,
    Optional
)
import httpx
from finrag.config import (
    constants as C,
    resolve_secret
)
from finrag.errors import IntegrityError
from finrag.rerank.mixins import RelevanceScorer
from finrag.transport import HttpJsonClient

class RemoteScorer(RelevanceScorer):
    def __init__(
        self,
        model: str = C.DEFAULT_RERANK_MODEL,
        base_url: str = C.DEFAULT_RERANK_BASE_URL,
        api_key: Optional[str] = None,
        timeout: float = C.DEFAULT_TIMEOUT_SECONDS,
        max_retries: int = C.DEFAULT_MAX_RETRIES,
        limiter: Optional[threading.BoundedSemaphore] = None,
        transport: Optional[httpx.BaseTransport] = None,
        path: str = "rerank"
    ):
        """
        Initialize the remote scorer.

        Args:
            model: Reranker model id
            base_url: Endpoint root
            api_key: Bearer token; defaults to FINRAG_RERANK_API_KEY or JINA_API_KEY
            timeout: Per-request timeout in seconds
            max_retries: Retry budget per request
            limiter: Shared concurrency bound
            transport: httpx transport override
            path: Endpoint path under base_url
        """

        self.model = model
        self.path = path
        self._client = HttpJsonClient(
            base_url=base_url,
            api_key=api_key or resolve_secret(C.RERANK_KEY_ENV),
            timeout=timeout,
            max_retries=max_retries,
            limiter=limiter,
            transport=transport
        )

    def _score(
        self,
        query: str,
        texts: List[str]
    ) -> List[float]:
        body = self._client.post_json(
            self.path,
            {"model": self.model, "query": query, "documents": texts}
        )
        return parse_scores(body, len(texts))

def parse_scores(
    body: Any,
    expected: int
) -> List[float]:
    """
    Extract input-ordered scores from a reranker response.

    Raises:
        IntegrityError: If the shape is unknown or the count is wrong
    """

    if isinstance(body, dict) and isinstance(body.get("scores"), list):
        scores = body["scores"]
    elif isinstance(body, dict) and isinstance(body.get("results"), list):
        scores: List[Any] = [None] * expected
        for item in body["results"]:
            try:
                position = int(item["index"])
                value = item["relevance_score"]
            except (KeyError, TypeError, ValueError) as exc:
                raise IntegrityError(f"malformed rerank result: {item!r}") from exc
            if not 0 <= position < expected or scores[position] is not None:
                raise IntegrityError(f"rerank result index {position} is invalid or repeated")
            scores[position] = value
        if any(value is None for value in scores):
            raise IntegrityError("rerank response does not score every document")
    else:
        raise IntegrityError("rerank response has neither 'scores' nor 'results'")

    if len(scores) != expected:
        raise IntegrityError(f"rerank response has {len(scores)} scores for {expected} documents")
    try:
        return [float(value) for value in scores]
    except (TypeError, ValueError) as exc:
        raise IntegrityError(f"rerank response contains a non-numeric score: {exc}") from exc
