"""
Validated configuration models for the whole engine.

Every default matches the production retrieval setup, so an empty config
file (or none at all) runs the engine with its standard hyperparameters.
"""

import hashlib
import json
import os
from pathlib import Path
from typing import (
    Any,
    Literal,
    Optional,
    Sequence,
    Union
)
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError as PydanticValidationError,
    model_validator
)
from finrag.errors import ConfigurationError
from finrag.config import constants as C
from finrag.utils import atomic_write_text

class SettingsModel(BaseModel):
    """
    Base model that reports validation failures as ConfigurationError.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    def __init__(
        self,
        **data: Any
    ):
        try:
            super().__init__(**data)
        except PydanticValidationError as exc:
            raise ConfigurationError(_describe(exc)) from exc

def _describe(
    exc: PydanticValidationError
) -> str:
    """
    Flatten pydantic errors into one readable line.
    """

    parts = []
    for error in exc.errors():
        location = ".".join(str(item) for item in error.get("loc", ())) or exc.title
        parts.append(f"{location}: {error.get('msg')}")
    return "; ".join(parts)

class ChunkingConfig(SettingsModel):
    chunk_size: int = Field(C.DEFAULT_CHUNK_SIZE, ge=1)
    overlap: int = Field(C.DEFAULT_CHUNK_OVERLAP, ge=0)

    @model_validator(mode="after")
    def _check_overlap(self) -> "ChunkingConfig":
        if self.overlap >= self.chunk_size:
            raise ValueError(
                f"overlap ({self.overlap}) must be smaller than chunk_size ({self.chunk_size})"
            )
        return self

    @property
    def stride(self) -> int:
        return self.chunk_size - self.overlap

class Bm25Params(SettingsModel):
    k1: float = Field(C.DEFAULT_BM25_K1, ge=0.0)
    b: float = Field(C.DEFAULT_BM25_B, ge=0.0, le=1.0)

class FusionConfig(SettingsModel):
    k: int = Field(C.DEFAULT_RRF_K, ge=1)

class EmbedderSpec(SettingsModel):
    """
    Which embedding provider to use and how to call it.
    """

    provider: str = C.DEFAULT_EMBEDDING_PROVIDER
    model: str = C.DEFAULT_EMBEDDING_MODEL
    dim: int = Field(C.DEFAULT_EMBEDDING_DIM, ge=1)
    batch_size: int = Field(C.DEFAULT_EMBEDDING_BATCH_SIZE, ge=1)
    base_url: Optional[str] = None
    timeout: float = Field(C.DEFAULT_TIMEOUT_SECONDS, gt=0)
    max_retries: int = Field(C.DEFAULT_MAX_RETRIES, ge=0)

class GatewaySpec(SettingsModel):
    """
    Endpoint settings of one chat-completions role.
    """

    model: str = C.DEFAULT_CHAT_MODEL
    base_url: str = C.DEFAULT_OPENAI_BASE_URL
    timeout: float = Field(C.DEFAULT_TIMEOUT_SECONDS, gt=0)
    max_retries: int = Field(C.DEFAULT_MAX_RETRIES, ge=0)
    backoff_seconds: float = Field(C.DEFAULT_BACKOFF_SECONDS, ge=0)
    temperature: float = Field(C.DEFAULT_TEMPERATURE, ge=0)

class RerankConfig(SettingsModel):
    max_candidates: int = Field(C.DEFAULT_MAX_CANDIDATES, ge=1)
    cumulative_keep_mass: float = Field(C.DEFAULT_CUMULATIVE_KEEP_MASS, gt=0.0, le=1.0)
    cliff_drop: float = Field(C.DEFAULT_CLIFF_DROP, gt=0.0)
    model: str = C.DEFAULT_RERANK_MODEL
    scorer: Literal["remote", "cross-encoder", "overlap"] = "remote"
    base_url: str = C.DEFAULT_RERANK_BASE_URL
    batch_size: int = Field(C.DEFAULT_MAX_CANDIDATES, ge=1)
    timeout: float = Field(C.DEFAULT_TIMEOUT_SECONDS, gt=0)
    max_retries: int = Field(C.DEFAULT_MAX_RETRIES, ge=0)

class PromptConfig(SettingsModel):
    system_prompt: str = C.DEFAULT_SYSTEM_PROMPT
    rewrite_prompt: str = C.DEFAULT_REWRITE_PROMPT
    judge_prompt: str = C.DEFAULT_JUDGE_PROMPT

class PipelineConfig(SettingsModel):
    """
    Every hyperparameter of ingestion, retrieval, reranking and generation.
    """

    chunking: ChunkingConfig = Field(default_factory=ChunkingConfig)
    bm25: Bm25Params = Field(default_factory=Bm25Params)
    fts_top_k: int = Field(C.DEFAULT_FTS_TOP_K, ge=1)
    semantic_top_k: int = Field(C.DEFAULT_SEMANTIC_TOP_K, ge=1)
    distance_threshold: float = Field(C.DEFAULT_DISTANCE_THRESHOLD, ge=0.0)
    fusion: FusionConfig = Field(default_factory=FusionConfig)
    rerank: RerankConfig = Field(default_factory=RerankConfig)
    no_rerank_context_limit: int = Field(C.DEFAULT_NO_RERANK_CONTEXT_LIMIT, ge=1)
    embedder: EmbedderSpec = Field(default_factory=EmbedderSpec)
    rewriter: GatewaySpec = Field(default_factory=GatewaySpec)
    generator: GatewaySpec = Field(default_factory=GatewaySpec)
    judge: GatewaySpec = Field(default_factory=GatewaySpec)
    prompts: PromptConfig = Field(default_factory=PromptConfig)
    max_concurrency: int = Field(C.DEFAULT_MAX_CONCURRENCY, ge=1)
    stub_answer_chars: int = Field(C.DEFAULT_STUB_ANSWER_CHARS, ge=1)

    def with_updates(
        self,
        **changes: Any
    ) -> "PipelineConfig":
        """
        Return a re-validated copy with top-level fields replaced.
        """

        data = self.model_dump()
        for key, value in changes.items():
            data[key] = value.model_dump() if isinstance(value, BaseModel) else value
        return PipelineConfig(**data)

def load_config(
    path: Optional[Union[str, Path]] = None
) -> PipelineConfig:
    """
    Load a PipelineConfig from a JSON file.

    Args:
        path: Config file; None returns the defaults

    Returns:
        Validated configuration

    Raises:
        ConfigurationError: If the file is missing, not JSON, or invalid
    """

    if path is None:
        return PipelineConfig()

    source = Path(path)
    if not source.is_file():
        raise ConfigurationError(f"Config file not found: {source}")
    try:
        raw = json.loads(source.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigurationError(f"Cannot read config file {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"Config file {source} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigurationError(f"Config file {source} must contain a JSON object")
    return PipelineConfig(**raw)

def save_config(
    cfg: PipelineConfig,
    path: Union[str, Path]
) -> Path:
    """
    Write a config as pretty-printed JSON.
    """

    return atomic_write_text(path, json.dumps(cfg.model_dump(), indent=2, sort_keys=True) + "\n")

def config_hash(
    cfg: SettingsModel
) -> str:
    """
    SHA-256 of the canonical JSON form of a config.
    """

    payload = json.dumps(cfg.model_dump(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()

def resolve_secret(
    names: Sequence[str]
) -> Optional[str]:
    """
    Return the first non-empty environment variable among names.
    """

    for name in names:
        value = os.getenv(name)
        if value:
            return value
    return None
