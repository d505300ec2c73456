"""
Module containing the SysBuild class, which is used to fill the inverted index.
"""

from collections import Counter
from typing import Iterable
from finrag.corpus.types import Chunk
from finrag.errors import DuplicateIdError
from finrag.text import tokenize

class SysBuild:
    def add_chunk(
        self,
        chunk_ref: str,
        text: str
    ) -> None:
        """
        Index one chunk.

        Args:
            chunk_ref: Chunk id, unique in the index
            text: Chunk text

        Raises:
            DuplicateIdError: If the chunk is already indexed
        """

        if chunk_ref in self.doc_lengths:
            raise DuplicateIdError(f"chunk '{chunk_ref}' is already indexed")

        tokens = tokenize(text)
        self.doc_lengths[chunk_ref] = len(tokens)
        self._total_length += len(tokens)
        for term, freq in Counter(tokens).items():
            self.postings.setdefault(term, []).append((chunk_ref, freq))

    def add_chunks(
        self,
        chunks: Iterable[Chunk]
    ) -> None:
        for chunk in chunks:
            self.add_chunk(chunk.chunk_id, chunk.text)

    @property
    def total_docs(self) -> int:
        return len(self.doc_lengths)

    @property
    def avg_doc_length(self) -> float:
        """
        Mean token count per chunk; 0.0 for an empty index.
        """

        if not self.doc_lengths:
            return 0.0
        return self._total_length / len(self.doc_lengths)
