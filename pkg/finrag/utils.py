"""
File helpers shared by every persisted artifact.

All writes go to a temporary sibling first and are renamed into place, so a
crashed run never leaves a half-written file behind.
"""

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import (
    Any,
    Iterable,
    Iterator,
    Mapping,
    Tuple,
    Union
)
from finrag.errors import (
    CorpusIOError,
    RecordFormatError
)

PathLike = Union[str, Path]

def atomic_write_bytes(
    path: PathLike,
    data: bytes
) -> Path:
    """
    Write bytes to a file through a temporary sibling and an atomic rename.

    Args:
        path: Destination file
        data: Content to write

    Returns:
        The destination path
    """

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", dir=str(target.parent))
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, target)
    except OSError as exc:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise CorpusIOError(f"Cannot write {target}: {exc}") from exc
    return target

def atomic_write_text(
    path: PathLike,
    text: str
) -> Path:
    """
    Write UTF-8 text atomically.
    """

    return atomic_write_bytes(path, text.encode("utf-8"))

def canonical_json(
    value: Any
) -> str:
    """
    Serialize a value with sorted keys and no insignificant whitespace.
    """

    return json.dumps(value, sort_keys=True, ensure_ascii=False, separators=(",", ":"))

def write_jsonl(
    path: PathLike,
    records: Iterable[Mapping[str, Any]]
) -> Path:
    """
    Write one canonical JSON object per line.
    """

    lines = [canonical_json(dict(record)) for record in records]
    body = "\n".join(lines) + ("\n" if lines else "")
    return atomic_write_text(path, body)

def iter_jsonl(
    path: PathLike
) -> Iterator[Tuple[int, Any]]:
    """
    Read a line-delimited JSON file.

    Args:
        path: File to read

    Yields:
        (line_number, parsed_object) pairs, 1-based, skipping blank lines

    Raises:
        CorpusIOError: If the file is missing or unreadable
        RecordFormatError: If a line is not valid JSON
    """

    source = Path(path)
    if not source.is_file():
        raise CorpusIOError(f"File not found: {source}")
    try:
        with source.open("r", encoding="utf-8") as handle:
            for line_number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    yield line_number, json.loads(line)
                except json.JSONDecodeError as exc:
                    raise RecordFormatError(f"invalid JSON ({exc.msg})", line_number=line_number) from exc
    except UnicodeDecodeError as exc:
        raise CorpusIOError(f"{source} is not valid UTF-8: {exc}") from exc
    except OSError as exc:
        raise CorpusIOError(f"Cannot read {source}: {exc}") from exc

def sha256_file(
    path: PathLike
) -> str:
    """
    Hash a file in 1 MiB blocks.
    """

    digest = hashlib.sha256()
    try:
        with Path(path).open("rb") as handle:
            for block in iter(lambda: handle.read(1 << 20), b""):
                digest.update(block)
    except OSError as exc:
        raise CorpusIOError(f"Cannot read {path}: {exc}") from exc
    return digest.hexdigest()
