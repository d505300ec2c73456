"""
Configuration module for Finrag.
"""

from finrag.config.settings import (
    Bm25Params,
    ChunkingConfig,
    EmbedderSpec,
    FusionConfig,
    GatewaySpec,
    PipelineConfig,
    PromptConfig,
    RerankConfig,
    config_hash,
    load_config,
    resolve_secret,
    save_config
)

__all__ = [
    "Bm25Params",
    "ChunkingConfig",
    "EmbedderSpec",
    "FusionConfig",
    "GatewaySpec",
    "PipelineConfig",
    "PromptConfig",
    "RerankConfig",
    "config_hash",
    "load_config",
    "resolve_secret",
    "save_config"
]
