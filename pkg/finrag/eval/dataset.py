"""
Module containing the benchmark dataset loaders.

Two line-delimited layouts are read:

    plain    {"query_id", "query", "ground_truth"}
    FinDER   {"_id" | "id", "text" | "query", "answer", "category"?, "reasoning"?}
"""

import logging
from pathlib import Path
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Literal,
    Mapping,
    Tuple,
    Union
)
from finrag.errors import (
    DuplicateIdError,
    FinragError,
    RecordFormatError,
    ValidationError
)
from finrag.eval.types import QueryRecord
from finrag.utils import iter_jsonl

logger = logging.getLogger(__name__)

DatasetFormat = Literal["auto", "plain", "finder"]

def _first(
    record: Mapping[str, Any],
    names: Tuple[str, ...]
) -> Any:
    for name in names:
        if record.get(name) not in (None, ""):
            return record[name]
    return None

def parse_query_record(
    record: Any,
    line_number: int,
    fmt: DatasetFormat = "auto"
) -> QueryRecord:
    """
    Build a QueryRecord from one decoded line.

    Raises:
        RecordFormatError: If a required field is missing or not a string
    """

    if not isinstance(record, dict):
        raise RecordFormatError("record must be a JSON object", line_number=line_number)
    if fmt == "auto":
        fmt = "plain" if "query_id" in record else "finder"

    if fmt == "plain":
        fields = {
            "query_id": record.get("query_id"),
            "query": record.get("query"),
            "ground_truth": record.get("ground_truth")
        }
    else:
        fields = {
            "query_id": _first(record, ("_id", "id", "query_id")),
            "query": _first(record, ("text", "query")),
            "ground_truth": _first(record, ("answer", "ground_truth"))
        }

    if isinstance(fields["query_id"], int) and not isinstance(fields["query_id"], bool):
        fields["query_id"] = str(fields["query_id"])
    for name, value in fields.items():
        if not isinstance(value, str) or not value.strip():
            raise RecordFormatError(f"field '{name}' must be a non-empty string", line_number=line_number)

    category = record.get("category")
    try:
        return QueryRecord(
            category=str(category) if category is not None else None,
            **fields
        )
    except FinragError as exc:
        raise RecordFormatError(exc.message, line_number=line_number) from exc

def records_from_rows(
    rows: Iterable[Tuple[int, Any]],
    fmt: DatasetFormat = "auto"
) -> List[QueryRecord]:
    """
    Parse numbered rows, rejecting repeated query ids.
    """

    records: List[QueryRecord] = []
    seen: Dict[str, int] = {}
    for line_number, row in rows:
        record = parse_query_record(row, line_number, fmt)
        if record.query_id in seen:
            raise DuplicateIdError(
                f"query_id '{record.query_id}' appears on lines {seen[record.query_id]} and {line_number}"
            )
        seen[record.query_id] = line_number
        records.append(record)
    return records

def load_dataset(
    path: Union[str, Path],
    fmt: DatasetFormat = "auto"
) -> List[QueryRecord]:
    """
    Load a benchmark dataset.

    Args:
        path: Line-delimited JSON file
        fmt: "plain", "finder", or "auto" to decide per record

    Returns:
        Records in file order

    Raises:
        CorpusIOError: If the file is missing
        RecordFormatError: If a line is malformed
        DuplicateIdError: If a query id repeats
    """

    if fmt not in ("auto", "plain", "finder"):
        raise ValidationError(f"unknown dataset format '{fmt}'; use auto, plain or finder")
    records = records_from_rows(iter_jsonl(path), fmt)
    logger.info("loaded %d queries from %s", len(records), path)
    return records
