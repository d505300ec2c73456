"""
Fixed-size overlapping chunking.

Windows start every ``chunk_size - overlap`` code points and the last window
is the first one whose end reaches the end of the text, so no trailing
sliver is ever emitted after the text is fully covered.
"""

from typing import (
    List,
    Sequence
)
from finrag.config import ChunkingConfig
from finrag.corpus.types import Chunk
from finrag.errors import (
    ConfigurationError,
    ValidationError
)

def make_chunk_id(
    doc_id: str,
    seq_index: int
) -> str:
    """
    Build the chunk id of the seq_index-th window of doc_id.

    The sequence number is zero padded so that lexical order of ids within a
    document follows window order.
    """

    return f"{doc_id}#{seq_index:06d}"

def chunk_text(
    text: str,
    cfg: ChunkingConfig,
    doc_id: str = ""
) -> List[Chunk]:
    """
    Split text into overlapping windows.

    Args:
        text: Text to split; offsets count Unicode code points
        cfg: Window size and overlap
        doc_id: Owner document, used to derive chunk ids

    Returns:
        Chunks in sequence order; an empty text yields an empty list

    Raises:
        ConfigurationError: If overlap is not smaller than chunk_size
    """

    if cfg.chunk_size < 1 or cfg.overlap < 0 or cfg.overlap >= cfg.chunk_size:
        raise ConfigurationError(
            f"invalid chunking config: chunk_size={cfg.chunk_size}, overlap={cfg.overlap}"
        )

    stride = cfg.chunk_size - cfg.overlap
    total = len(text)
    chunks: List[Chunk] = []
    start = 0
    while start < total:
        end = min(start + cfg.chunk_size, total)
        seq_index = len(chunks)
        chunks.append(
            Chunk(
                chunk_id=make_chunk_id(doc_id, seq_index),
                doc_id=doc_id,
                seq_index=seq_index,
                char_start=start,
                char_end=end,
                text=text[start:end]
            )
        )
        if end >= total:
            break
        start += stride
    return chunks

def merge_chunks(
    chunks: Sequence[Chunk]
) -> str:
    """
    Rebuild the source text from the chunks of one document.

    Args:
        chunks: Chunks of a single document in sequence order

    Returns:
        The original text

    Raises:
        ValidationError: If the chunks leave a gap or come from several documents
    """

    if not chunks:
        return ""

    doc_id = chunks[0].doc_id
    parts = [chunks[0].text]
    covered = chunks[0].char_end
    for chunk in chunks[1:]:
        if chunk.doc_id != doc_id:
            raise ValidationError("cannot merge chunks of different documents")
        if chunk.char_start > covered:
            raise ValidationError(
                f"gap between offsets {covered} and {chunk.char_start} in '{doc_id}'"
            )
        parts.append(chunk.text[covered - chunk.char_start:])
        covered = max(covered, chunk.char_end)
    return "".join(parts)
