"""
Module containing the ChatClient class, a chat-completions client shared by the remote roles.
"""

import logging
import threading
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Optional,
    TypeVar
)
import httpx
from finrag.config import (
    GatewaySpec,
    constants as C,
    resolve_secret
)
from finrag.errors import (
    ConfigurationError,
    IntegrityError
)
from finrag.transport import HttpJsonClient

logger = logging.getLogger(__name__)

T = TypeVar("T")

class ChatClient:
    def __init__(
        self,
        spec: GatewaySpec,
        api_key: Optional[str] = None,
        limiter: Optional[threading.BoundedSemaphore] = None,
        transport: Optional[httpx.BaseTransport] = None,
        sleep: Optional[Callable[[float], None]] = None
    ):
        """
        Initialize a chat-completions client.

        Args:
            spec: Model, endpoint, timeout and retry settings
            api_key: Bearer token; defaults to FINRAG_OPENAI_API_KEY or OPENAI_API_KEY
            limiter: Shared concurrency bound
            transport: httpx transport override
            sleep: Backoff delay function, replaceable in tests
        """

        self.spec = spec
        api_key = api_key or resolve_secret(C.OPENAI_KEY_ENV)
        if not api_key:
            raise ConfigurationError(
                "A chat API key is required. Set FINRAG_OPENAI_API_KEY or OPENAI_API_KEY."
            )
        extra: Dict[str, Any] = {} if sleep is None else {"sleep": sleep}
        self._http = HttpJsonClient(
            base_url=spec.base_url,
            api_key=api_key,
            timeout=spec.timeout,
            max_retries=spec.max_retries,
            backoff_seconds=spec.backoff_seconds,
            limiter=limiter,
            transport=transport,
            **extra
        )

    def complete(
        self,
        messages: List[Dict[str, str]],
        json_mode: bool = False,
        temperature: Optional[float] = None
    ) -> str:
        """
        Send one chat completion and return the assistant text.

        Raises:
            TransportError: If the endpoint keeps failing
            IntegrityError: If the response has no message content
        """

        payload: Dict[str, Any] = {
            "model": self.spec.model,
            "messages": messages,
            "temperature": self.spec.temperature if temperature is None else temperature
        }
        if json_mode:
            payload["response_format"] = {"type": "json_object"}
        body = self._http.post_json("chat/completions", payload)
        try:
            content = body["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise IntegrityError(f"unexpected chat completion shape: {exc}") from exc
        return content if isinstance(content, str) else ""

    def complete_parsed(
        self,
        messages: List[Dict[str, str]],
        parse: Callable[[str], T],
        json_mode: bool = False
    ) -> T:
        """
        Complete and parse, asking again when the reply does not parse.

        The parse attempts share the client's retry budget.

        Raises:
            IntegrityError: If no reply parses within the budget
        """

        last: Optional[IntegrityError] = None
        for attempt in range(self.spec.max_retries + 1):
            content = self.complete(messages, json_mode=json_mode)
            try:
                return parse(content)
            except IntegrityError as exc:
                last = exc
                logger.warning(
                    "unparseable reply from %s (attempt %d): %s",
                    self.spec.model,
                    attempt + 1,
                    exc
                )
        raise IntegrityError(f"no valid reply after {self.spec.max_retries + 1} attempts: {last}")

    def close(self) -> None:
        self._http.close()
