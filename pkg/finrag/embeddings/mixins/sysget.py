"""
Embedding provider factory helpers.
"""

import threading
from typing import (
    Any,
    Dict,
    Optional
)
from finrag.config import EmbedderSpec
from finrag.errors import ConfigurationError

def _validate_remaining_config(
    provider: str,
    config: dict
) -> None:
    """
    Validate that no unsupported config keys are provided.
    """

    if config:
        unsupported_keys = ", ".join(sorted(config.keys()))
        raise ConfigurationError(
            f"Unsupported embedding config keys for provider '{provider}': {unsupported_keys}"
        )

def get_embedding_function(
    provider: str = "stub",
    **config: Any
):
    """
    Get an embedding function from supported providers.

    Args:
        provider: Embedding provider (stub, openai, ollama, sentence-transformers)
        **config: Provider-specific configuration
    """

    provider = provider.lower().strip().replace("_", "-")

    # deterministic offline provider
    if provider in {"stub", "hashing"}:
        from finrag.embeddings.hashing import HashingEmbedding

        dimension = config.pop("dimension", 1024)
        config.pop("model", None)
        _validate_remaining_config(provider, config)
        return HashingEmbedding(dimension=dimension)

    # openai provider
    if provider == "openai":
        from finrag.embeddings.openai import OpenAIEmbedding

        return OpenAIEmbedding(**_take(provider, config, (
            "api_key", "model", "base_url", "timeout", "max_retries",
            "dimension", "limiter", "transport"
        )))

    # ollama provider
    if provider == "ollama":
        from finrag.embeddings.ollama import OllamaEmbedding

        return OllamaEmbedding(**_take(provider, config, (
            "model", "base_url", "timeout", "max_retries", "dimension",
            "limiter", "transport"
        )))

    # sentence-transformers provider
    if provider in {"sentence-transformers", "sentence-transformer"}:
        from finrag.embeddings.sentence_transformers import SentenceTransformerEmbedding

        return SentenceTransformerEmbedding(**_take(provider, config, (
            "model", "device", "normalize_embeddings", "dimension"
        )))
    raise ConfigurationError(
        f"Unsupported embedding provider '{provider}'. "
        "Supported providers: stub, openai, ollama, sentence-transformers."
    )

def _take(
    provider: str,
    config: dict,
    allowed: tuple
) -> dict:
    """
    Pop the allowed keys that are set and reject the rest.
    """

    taken = {key: config.pop(key) for key in allowed if config.get(key) is not None}
    _validate_remaining_config(provider, config)
    return taken

def embedder_from_spec(
    spec: EmbedderSpec,
    limiter: Optional[threading.BoundedSemaphore] = None,
    stub: bool = False
):
    """
    Build the embedder described by an EmbedderSpec.

    Args:
        spec: Provider, model, dimension and transport settings
        limiter: Shared concurrency bound for remote providers
        stub: Force the offline hashing provider with the same dimension
    """

    if stub or spec.provider in {"stub", "hashing"}:
        return get_embedding_function("stub", dimension=spec.dim)

    config: Dict[str, Any] = {"model": spec.model, "dimension": spec.dim}
    if spec.provider in {"openai", "ollama"}:
        config.update(
            base_url=spec.base_url,
            timeout=spec.timeout,
            max_retries=spec.max_retries,
            limiter=limiter
        )
    return get_embedding_function(spec.provider, **config)
