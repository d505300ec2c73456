"""
Module containing the RunManifest class, which records what a command ran with.
"""

import json
from dataclasses import (
    asdict,
    dataclass,
    field
)
from datetime import (
    datetime,
    timezone
)
from pathlib import Path
from typing import (
    Any,
    Dict,
    Optional,
    Union
)
from finrag import __version__
from finrag.config import (
    PipelineConfig,
    config_hash
)
from finrag.utils import atomic_write_text

@dataclass
class RunManifest:
    command: str
    config: Dict[str, Any]
    config_hash: str
    seed: int
    tool_version: str
    corpus_hash: Optional[str] = None
    index_hashes: Dict[str, str] = field(default_factory=dict)
    extras: Dict[str, Any] = field(default_factory=dict)
    created_at: str = ""

    @classmethod
    def create(
        cls,
        command: str,
        cfg: PipelineConfig,
        seed: int,
        **values: Any
    ) -> "RunManifest":
        """
        Snapshot a config and stamp the current UTC time.
        """

        return cls(
            command=command,
            config=cfg.model_dump(),
            config_hash=config_hash(cfg),
            seed=seed,
            tool_version=__version__,
            created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            **values
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def write(
        self,
        path: Union[str, Path]
    ) -> Path:
        return atomic_write_text(path, json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")
