"""
Module containing the SysStore class, which is used to persist a corpus as a chunk store.

A chunk store is a directory with three files:

    documents.jsonl   one Document per line
    chunks.jsonl      one Chunk per line, in corpus order
    manifest.json     format name, version, chunking config, counts, corpus hash
"""

import json
import logging
from pathlib import Path
from typing import (
    Any,
    Dict,
    List,
    Union
)
from finrag.config import ChunkingConfig
from finrag.corpus.types import (
    Chunk,
    Document
)
from finrag.errors import (
    CorpusIOError,
    IndexFormatError,
    IntegrityError,
    RecordFormatError
)
from finrag.utils import (
    atomic_write_text,
    iter_jsonl,
    write_jsonl
)

logger = logging.getLogger(__name__)

STORE_FORMAT = "finrag-chunk-store"
STORE_VERSION = 1
DOCUMENTS_FILE = "documents.jsonl"
CHUNKS_FILE = "chunks.jsonl"
MANIFEST_FILE = "manifest.json"

class SysStore:
    def save(
        self,
        directory: Union[str, Path]
    ) -> Path:
        """
        Write the corpus to a chunk store directory.

        Args:
            directory: Target directory, created if needed

        Returns:
            Path to the manifest file
        """

        target = Path(directory)
        target.mkdir(parents=True, exist_ok=True)

        write_jsonl(target / DOCUMENTS_FILE, (doc.to_dict() for doc in self.documents))
        write_jsonl(target / CHUNKS_FILE, (chunk.to_dict() for chunk in self.chunks))
        manifest = {
            "format": STORE_FORMAT,
            "version": STORE_VERSION,
            "chunking": self.chunking.model_dump(),
            "document_count": len(self.documents),
            "chunk_count": len(self.chunks),
            "corpus_hash": self.corpus_hash()
        }
        path = atomic_write_text(
            target / MANIFEST_FILE,
            json.dumps(manifest, indent=2, sort_keys=True) + "\n"
        )
        logger.info("saved chunk store with %d chunks to %s", len(self.chunks), target)
        return path

    @classmethod
    def load(
        cls,
        directory: Union[str, Path]
    ):
        """
        Read a chunk store written by save().

        Raises:
            CorpusIOError: If a file is missing
            IndexFormatError: If the manifest is not an object with chunking settings,
                or names another format or version
            IntegrityError: If counts, offsets or the corpus hash disagree
        """

        source = Path(directory)
        manifest_path = source / MANIFEST_FILE
        if not manifest_path.is_file():
            raise CorpusIOError(f"No chunk store manifest at {manifest_path}")
        try:
            manifest: Dict[str, Any] = json.loads(manifest_path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise CorpusIOError(f"Cannot read {manifest_path}: {exc}") from exc
        if not isinstance(manifest, dict) or not isinstance(manifest.get("chunking"), dict):
            raise IndexFormatError(f"{manifest_path} is not a chunk store manifest object")
        if manifest.get("format") != STORE_FORMAT or manifest.get("version") != STORE_VERSION:
            raise IndexFormatError(
                f"{manifest_path} is not a version {STORE_VERSION} {STORE_FORMAT}"
            )

        documents: List[Document] = []
        for line_number, record in iter_jsonl(source / DOCUMENTS_FILE):
            try:
                documents.append(Document(**record))
            except TypeError as exc:
                raise RecordFormatError(str(exc), line_number=line_number) from exc

        chunks: List[Chunk] = []
        for line_number, record in iter_jsonl(source / CHUNKS_FILE):
            try:
                chunks.append(Chunk(**record))
            except TypeError as exc:
                raise RecordFormatError(str(exc), line_number=line_number) from exc

        if len(documents) != manifest.get("document_count") or len(chunks) != manifest.get("chunk_count"):
            raise IntegrityError(f"chunk store {source} does not match its manifest counts")

        corpus = cls(
            documents=documents,
            chunks=chunks,
            chunking=ChunkingConfig(**manifest["chunking"])
        )
        corpus._check_offsets()
        if corpus.corpus_hash() != manifest.get("corpus_hash"):
            raise IntegrityError(f"chunk store {source} does not match its corpus hash")
        return corpus

    def _check_offsets(self) -> None:
        """
        Verify every chunk is the exact slice of its document it claims to be.
        """

        for chunk in self.chunks:
            document = self.get_document(chunk.doc_id)
            if document.text[chunk.char_start:chunk.char_end] != chunk.text:
                raise IntegrityError(
                    f"chunk '{chunk.chunk_id}' does not match document text "
                    f"[{chunk.char_start}, {chunk.char_end})"
                )
