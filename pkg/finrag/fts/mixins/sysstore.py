"""
Module containing the SysStore class, which is used to persist the keyword index.

The file is one canonical JSON object (sorted keys, postings sorted by chunk
id), so saving a loaded index reproduces the original bytes.
"""

import json
from pathlib import Path
from typing import (
    Any,
    Dict,
    Union
)
from finrag.config import Bm25Params
from finrag.errors import (
    CorpusIOError,
    IndexFormatError
)
from finrag.utils import (
    atomic_write_text,
    canonical_json
)

FTS_FORMAT = "finrag-fts"
FTS_VERSION = 1

class SysStore:
    def to_payload(self) -> Dict[str, Any]:
        return {
            "format": FTS_FORMAT,
            "version": FTS_VERSION,
            "params": self.params.model_dump(),
            "doc_lengths": dict(self.doc_lengths),
            "postings": {
                term: [[ref, freq] for ref, freq in sorted(entries)]
                for term, entries in self.postings.items()
            }
        }

    def save(
        self,
        path: Union[str, Path]
    ) -> Path:
        """
        Write the index to a file.
        """

        return atomic_write_text(path, canonical_json(self.to_payload()) + "\n")

    @classmethod
    def load(
        cls,
        path: Union[str, Path]
    ):
        """
        Read an index written by save().

        Raises:
            CorpusIOError: If the file is missing or not JSON
            IndexFormatError: If the format or version is not recognized
        """

        source = Path(path)
        if not source.is_file():
            raise CorpusIOError(f"Keyword index not found: {source}")
        try:
            payload = json.loads(source.read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise CorpusIOError(f"Cannot read keyword index {source}: {exc}") from exc
        if not isinstance(payload, dict) or payload.get("format") != FTS_FORMAT:
            raise IndexFormatError(f"{source} is not a keyword index")
        if payload.get("version") != FTS_VERSION:
            raise IndexFormatError(
                f"{source} has version {payload.get('version')}, expected {FTS_VERSION}"
            )

        index = cls(params=Bm25Params(**payload["params"]))
        for ref, length in payload["doc_lengths"].items():
            index.doc_lengths[ref] = int(length)
            index._total_length += int(length)
        for term, entries in payload["postings"].items():
            index.postings[term] = [(ref, int(freq)) for ref, freq in entries]
        return index
