"""
Module containing the SysIngest class, which is used to build a corpus from document records.
"""

import logging
from pathlib import Path
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Mapping,
    Tuple,
    Union
)
from finrag.config import ChunkingConfig
from finrag.corpus.chunking import chunk_text
from finrag.corpus.types import (
    Chunk,
    Document
)
from finrag.errors import (
    DuplicateIdError,
    RecordFormatError
)
from finrag.text import strip_html
from finrag.utils import iter_jsonl

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ("doc_id", "text")
OPTIONAL_FIELDS = ("ticker", "source_name")

def parse_document(
    record: Union[Document, Mapping[str, Any]],
    line_number: int,
    html: bool = False
) -> Document:
    """
    Turn a raw record into a Document.

    Args:
        record: Document instance or mapping with doc_id, ticker, source_name, text
        line_number: 1-based position of the record, used in error messages
        html: Strip HTML from every record; a record may also set "format": "html"

    Returns:
        The parsed document

    Raises:
        RecordFormatError: If required fields are missing or have the wrong type
    """

    if isinstance(record, Document):
        return Document(
            doc_id=record.doc_id,
            ticker=record.ticker,
            source_name=record.source_name,
            text=strip_html(record.text) if html else record.text
        )
    if not isinstance(record, Mapping):
        raise RecordFormatError("record must be a JSON object", line_number=line_number)

    for field in REQUIRED_FIELDS:
        if field not in record:
            raise RecordFormatError(f"missing field '{field}'", line_number=line_number)
    for field in REQUIRED_FIELDS + OPTIONAL_FIELDS:
        value = record.get(field, "")
        if not isinstance(value, str):
            raise RecordFormatError(f"field '{field}' must be a string", line_number=line_number)
    if not record["doc_id"]:
        raise RecordFormatError("doc_id must not be empty", line_number=line_number)

    text = record["text"]
    if html or str(record.get("format", "text")).lower() == "html":
        text = strip_html(text)

    return Document(
        doc_id=record["doc_id"],
        ticker=record.get("ticker", ""),
        source_name=record.get("source_name", ""),
        text=text
    )

class SysIngest:
    @classmethod
    def from_records(
        cls,
        records: Iterable[Union[Document, Mapping[str, Any]]],
        cfg: ChunkingConfig,
        html: bool = False
    ):
        """
        Chunk a stream of documents into a corpus.

        Args:
            records: Documents or mappings, one per source filing
            cfg: Chunking parameters
            html: Strip HTML before chunking

        Returns:
            Corpus holding every document and chunk

        Raises:
            DuplicateIdError: If two records share a doc_id
            RecordFormatError: If a record is malformed (reports its 1-based position)
        """

        return cls._from_numbered(enumerate(records, start=1), cfg, html=html)

    @classmethod
    def from_jsonl(
        cls,
        path: Union[str, Path],
        cfg: ChunkingConfig,
        html: bool = False
    ):
        """
        Chunk a line-delimited document file; errors carry the file line number.
        """

        return cls._from_numbered(iter_jsonl(path), cfg, html=html)

    @classmethod
    def _from_numbered(
        cls,
        numbered: Iterable[Tuple[int, Any]],
        cfg: ChunkingConfig,
        html: bool = False
    ):
        documents: List[Document] = []
        chunks: List[Chunk] = []
        first_seen: Dict[str, int] = {}

        for line_number, record in numbered:
            document = parse_document(record, line_number, html=html)
            if document.doc_id in first_seen:
                raise DuplicateIdError(
                    f"duplicate doc_id '{document.doc_id}' at record {line_number} "
                    f"(first seen at record {first_seen[document.doc_id]})"
                )
            first_seen[document.doc_id] = line_number
            documents.append(document)
            chunks.extend(chunk_text(document.text, cfg, doc_id=document.doc_id))

        logger.info("ingested %d documents into %d chunks", len(documents), len(chunks))
        return cls(documents=documents, chunks=chunks, chunking=cfg)
