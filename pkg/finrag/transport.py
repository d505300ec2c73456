"""
JSON-over-HTTP client with bounded retries, shared by every remote provider.
"""

import contextlib
import json
import logging
import threading
import time
from typing import (
    Any,
    Callable,
    Dict,
    Mapping,
    Optional
)
import httpx
from finrag.errors import (
    IntegrityError,
    TransportError
)

logger = logging.getLogger(__name__)

RETRY_STATUSES = (429, 500, 502, 503, 504)
REDACTED = "***"
_SECRET_HEADERS = ("authorization", "api-key", "x-api-key")

def redact_headers(
    headers: Mapping[str, str]
) -> Dict[str, str]:
    """
    Copy headers with credentials replaced.
    """

    return {
        name: (REDACTED if name.lower() in _SECRET_HEADERS else value)
        for name, value in headers.items()
    }

class HttpJsonClient:
    """
    POSTs JSON bodies and returns decoded JSON responses.

    Transport failures and statuses 429/500/502/503/504 are retried up to
    max_retries times with exponential backoff; other 4xx responses fail at
    once. An optional semaphore bounds in-flight requests across all clients
    sharing it.
    """

    def __init__(
        self,
        base_url: str,
        api_key: Optional[str] = None,
        timeout: float = 60.0,
        max_retries: int = 3,
        backoff_seconds: float = 0.5,
        limiter: Optional[threading.BoundedSemaphore] = None,
        transport: Optional[httpx.BaseTransport] = None,
        sleep: Callable[[float], None] = time.sleep,
        headers: Optional[Mapping[str, str]] = None
    ):
        """
        Initialize the client.

        Args:
            base_url: Endpoint root, e.g. https://api.openai.com/v1
            api_key: Sent as a bearer token when set
            timeout: Per-request timeout in seconds
            max_retries: Retries after the first attempt
            backoff_seconds: First backoff delay, doubled after each retry
            limiter: Shared semaphore bounding concurrent requests
            transport: httpx transport override (tests use httpx.MockTransport)
            sleep: Delay function, replaceable in tests
            headers: Extra headers
        """

        self.base_url = base_url.rstrip("/")
        self.max_retries = max_retries
        self.backoff_seconds = backoff_seconds
        self._limiter = limiter
        self._sleep = sleep

        request_headers = {"Content-Type": "application/json"}
        if api_key:
            request_headers["Authorization"] = f"Bearer {api_key}"
        if headers:
            request_headers.update(headers)
        self._headers = request_headers

        self._client = httpx.Client(
            base_url=self.base_url,
            timeout=timeout,
            headers=request_headers,
            transport=transport
        )

    def _slot(self):
        return self._limiter if self._limiter is not None else contextlib.nullcontext()

    def post_json(
        self,
        path: str,
        payload: Mapping[str, Any]
    ) -> Any:
        """
        POST a JSON payload and decode the JSON response.

        Args:
            path: Path relative to base_url
            payload: Request body

        Returns:
            Decoded response body

        Raises:
            TransportError: If the request keeps failing or is rejected
            IntegrityError: If the response body is not JSON
        """

        url = f"{self.base_url}/{path.lstrip('/')}"
        attempts = self.max_retries + 1
        last_problem = "no attempt made"

        for attempt in range(attempts):
            if logger.isEnabledFor(logging.DEBUG):
                logger.debug(
                    "POST %s attempt %d headers=%s body=%s",
                    url,
                    attempt + 1,
                    redact_headers(self._headers),
                    json.dumps(payload, ensure_ascii=False)
                )
            try:
                with self._slot():
                    response = self._client.post(url, json=dict(payload))
            except httpx.TransportError as exc:
                last_problem = f"{type(exc).__name__}: {exc}"
            else:
                logger.debug("POST %s -> %d %s", url, response.status_code, response.text)
                if response.status_code in RETRY_STATUSES:
                    last_problem = f"HTTP {response.status_code}"
                elif response.is_error:
                    raise TransportError(
                        f"POST {url} rejected with HTTP {response.status_code}: {response.text[:300]}"
                    )
                else:
                    try:
                        return response.json()
                    except ValueError as exc:
                        raise IntegrityError(f"POST {url} returned a non-JSON body") from exc

            if attempt < attempts - 1:
                delay = self.backoff_seconds * (2 ** attempt)
                logger.warning(
                    "POST %s failed (%s); retrying in %.2fs (%d/%d)",
                    url,
                    last_problem,
                    delay,
                    attempt + 1,
                    self.max_retries
                )
                self._sleep(delay)

        raise TransportError(f"POST {url} failed after {attempts} attempts: {last_problem}")

    def close(self) -> None:
        self._client.close()
