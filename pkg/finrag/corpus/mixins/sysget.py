"""
Module containing the SysGet class, which is used to look up documents and chunks of a corpus.
"""

from typing import (
    List,
    Sequence
)
from finrag.corpus.types import (
    Chunk,
    Document
)
from finrag.errors import ValidationError

class SysGet:
    def get_chunk(
        self,
        chunk_ref: str
    ) -> Chunk:
        """
        Get a chunk by id.

        Raises:
            ValidationError: If the chunk does not exist
        """

        try:
            return self._chunk_map[chunk_ref]
        except KeyError:
            raise ValidationError(f"unknown chunk '{chunk_ref}'") from None

    def get_chunks(
        self,
        chunk_refs: Sequence[str]
    ) -> List[Chunk]:
        return [self.get_chunk(ref) for ref in chunk_refs]

    def get_document(
        self,
        doc_id: str
    ) -> Document:
        try:
            return self._document_map[doc_id]
        except KeyError:
            raise ValidationError(f"unknown document '{doc_id}'") from None

    def chunks_of(
        self,
        doc_id: str
    ) -> List[Chunk]:
        """
        Chunks of one document in sequence order.
        """

        return [chunk for chunk in self.chunks if chunk.doc_id == doc_id]
