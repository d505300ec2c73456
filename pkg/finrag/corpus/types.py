"""
Document and chunk records.
"""

from dataclasses import (
    asdict,
    dataclass
)
from typing import (
    Any,
    Dict
)

@dataclass(frozen=True)
class Document:
    """
    A source filing as plain text.
    """

    doc_id: str
    ticker: str
    source_name: str
    text: str

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

@dataclass(frozen=True)
class Chunk:
    """
    A window [char_start, char_end) of a document, in code points.
    """

    chunk_id: str
    doc_id: str
    seq_index: int
    char_start: int
    char_end: int
    text: str

    @property
    def length(self) -> int:
        return self.char_end - self.char_start

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
