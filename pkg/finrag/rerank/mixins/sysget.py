"""
Reranker scorer factory helpers.
"""

import threading
from typing import (
    Any,
    Optional
)
from finrag.config import RerankConfig
from finrag.errors import ConfigurationError

def get_scorer(
    kind: str = "overlap",
    **config: Any
):
    """
    Get a relevance scorer.

    Args:
        kind: Scorer kind (overlap, remote, cross-encoder)
        **config: Scorer-specific configuration
    """

    kind = kind.lower().strip().replace("_", "-")

    if kind == "overlap":
        from finrag.rerank.overlap import OverlapScorer

        if config:
            raise ConfigurationError(
                f"Unsupported scorer config keys for 'overlap': {', '.join(sorted(config))}"
            )
        return OverlapScorer()

    if kind == "remote":
        from finrag.rerank.remote import RemoteScorer

        return RemoteScorer(**config)

    if kind == "cross-encoder":
        from finrag.rerank.cross_encoder import CrossEncoderScorer

        return CrossEncoderScorer(**config)
    raise ConfigurationError(
        f"Unsupported reranker scorer '{kind}'. "
        "Supported scorers: overlap, remote, cross-encoder."
    )

def scorer_from_config(
    cfg: RerankConfig,
    limiter: Optional[threading.BoundedSemaphore] = None,
    stub: bool = False
):
    """
    Build the scorer selected by a RerankConfig.

    Args:
        cfg: Rerank settings
        limiter: Shared concurrency bound for the remote scorer
        stub: Force the offline overlap scorer
    """

    if stub or cfg.scorer == "overlap":
        return get_scorer("overlap")
    if cfg.scorer == "remote":
        return get_scorer(
            "remote",
            model=cfg.model,
            base_url=cfg.base_url,
            timeout=cfg.timeout,
            max_retries=cfg.max_retries,
            limiter=limiter
        )
    return get_scorer("cross-encoder", model=cfg.model)
