"""
Module containing the SysStore class, which is used to persist the vector index as a binary file.

Layout, all little-endian:

    header   8s magic, uint16 version, uint32 dim, uint32 count
    refs     count x (uint32 byte length, UTF-8 bytes)
    vectors  count x dim float32
"""

import struct
from pathlib import Path
from typing import Union
import numpy as np
from finrag.errors import (
    CorpusIOError,
    IndexFormatError
)
from finrag.utils import atomic_write_bytes

VECTOR_MAGIC = b"FINRAGVX"
VECTOR_VERSION = 1
HEADER = struct.Struct("<8sHII")
REF_LENGTH = struct.Struct("<I")

class SysStore:
    def to_bytes(self) -> bytes:
        """
        Serialize the index.
        """

        payload = bytearray(HEADER.pack(VECTOR_MAGIC, VECTOR_VERSION, self.dim, len(self.refs)))
        for ref in self.refs:
            encoded = ref.encode("utf-8")
            payload.extend(REF_LENGTH.pack(len(encoded)))
            payload.extend(encoded)
        if self.refs:
            payload.extend(np.ascontiguousarray(self._matrix, dtype="<f4").tobytes())
        return bytes(payload)

    def save(
        self,
        path: Union[str, Path]
    ) -> Path:
        return atomic_write_bytes(path, self.to_bytes())

    @classmethod
    def from_bytes(
        cls,
        raw: bytes,
        source: str = "<bytes>"
    ):
        """
        Rebuild an index from to_bytes() output.

        Raises:
            IndexFormatError: If the magic, version or sizes do not match
        """

        if len(raw) < HEADER.size:
            raise IndexFormatError(f"{source} is too short to be a vector index")
        magic, version, dim, count = HEADER.unpack_from(raw, 0)
        if magic != VECTOR_MAGIC:
            raise IndexFormatError(f"{source} is not a vector index (bad magic)")
        if version != VECTOR_VERSION:
            raise IndexFormatError(f"{source} has version {version}, expected {VECTOR_VERSION}")
        if dim < 1:
            raise IndexFormatError(f"{source} declares dimension {dim}")

        offset = HEADER.size
        refs = []
        for _ in range(count):
            if offset + REF_LENGTH.size > len(raw):
                raise IndexFormatError(f"{source} ends inside the ref table")
            (length,) = REF_LENGTH.unpack_from(raw, offset)
            offset += REF_LENGTH.size
            if offset + length > len(raw):
                raise IndexFormatError(f"{source} ends inside the ref table")
            try:
                refs.append(raw[offset:offset + length].decode("utf-8"))
            except UnicodeDecodeError as exc:
                raise IndexFormatError(f"{source} has an invalid ref: {exc}") from exc
            offset += length

        expected = count * dim * 4
        if len(raw) - offset != expected:
            raise IndexFormatError(
                f"{source} holds {len(raw) - offset} vector bytes, expected {expected}"
            )

        index = cls(dim=dim)
        if count:
            matrix = np.frombuffer(raw, dtype="<f4", count=count * dim, offset=offset)
            index.add_vectors(zip(refs, matrix.reshape(count, dim)))
        return index

    @classmethod
    def load(
        cls,
        path: Union[str, Path]
    ):
        source = Path(path)
        if not source.is_file():
            raise CorpusIOError(f"Vector index not found: {source}")
        try:
            raw = source.read_bytes()
        except OSError as exc:
            raise CorpusIOError(f"Cannot read vector index {source}: {exc}") from exc
        return cls.from_bytes(raw, source=str(source))
