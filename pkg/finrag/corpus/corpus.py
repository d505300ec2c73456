"""
Corpus API: the immutable set of documents and chunks every index is built from.
"""

import hashlib
import json
from pathlib import Path
from typing import (
    Any,
    Iterable,
    Mapping,
    Sequence,
    Union
)
from finrag.config import ChunkingConfig
from finrag.corpus.mixins import (
    SysGet,
    SysIngest,
    SysStore
)
from finrag.corpus.types import (
    Chunk,
    Document
)
from finrag.errors import DuplicateIdError

class Corpus(
    SysIngest,
    SysGet,
    SysStore
):
    """
    Documents plus their chunks. Read-only once constructed.
    """

    def __init__(
        self,
        documents: Sequence[Document],
        chunks: Sequence[Chunk],
        chunking: ChunkingConfig
    ):
        """
        Initialize a corpus.

        Args:
            documents: Source documents, unique doc_id
            chunks: Chunks of those documents in corpus order
            chunking: Config the chunks were produced with
        """

        self.documents = tuple(documents)
        self.chunks = tuple(chunks)
        self.chunking = chunking

        self._document_map = {}
        for document in self.documents:
            if document.doc_id in self._document_map:
                raise DuplicateIdError(f"duplicate doc_id '{document.doc_id}'")
            self._document_map[document.doc_id] = document

        self._chunk_map = {}
        for chunk in self.chunks:
            if chunk.chunk_id in self._chunk_map:
                raise DuplicateIdError(f"duplicate chunk_id '{chunk.chunk_id}'")
            self._chunk_map[chunk.chunk_id] = chunk

    def __len__(self) -> int:
        return len(self.chunks)

    def __repr__(self) -> str:
        return f"Corpus(documents={len(self.documents)}, chunks={len(self.chunks)})"

    def corpus_hash(self) -> str:
        """
        SHA-256 over the chunking config and every document, in corpus order.
        """

        digest = hashlib.sha256()
        digest.update(json.dumps(self.chunking.model_dump(), sort_keys=True).encode("utf-8"))
        for document in self.documents:
            digest.update(b"\n")
            digest.update(json.dumps(document.to_dict(), sort_keys=True, ensure_ascii=False).encode("utf-8"))
        return digest.hexdigest()

def ingest_corpus(
    records: Iterable[Union[Document, Mapping[str, Any]]],
    cfg: ChunkingConfig,
    html: bool = False
) -> Corpus:
    """
    Chunk every document of a record stream.

    Args:
        records: Documents or mappings with doc_id, ticker, source_name, text
        cfg: Chunking parameters
        html: Strip HTML tags before chunking

    Returns:
        The corpus handle
    """

    return Corpus.from_records(records, cfg, html=html)

def ingest_jsonl(
    path: Union[str, Path],
    cfg: ChunkingConfig,
    html: bool = False
) -> Corpus:
    return Corpus.from_jsonl(path, cfg, html=html)
