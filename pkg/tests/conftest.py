"""
Shared fixtures: a small synthetic filing corpus and offline engines.
"""

import json
from pathlib import Path
from typing import (
    Dict,
    List
)
import pytest
from finrag.config import PipelineConfig
from finrag.corpus import (
    Corpus,
    ingest_corpus
)
from finrag.pipeline import Engine

COMPANIES = [
    ("AAPL", "Apple", "iPhone"),
    ("MSFT", "Microsoft", "Azure"),
    ("NVDA", "Nvidia", "datacenter GPUs"),
    ("AMZN", "Amazon", "AWS"),
    ("GOOG", "Alphabet", "search advertising"),
    ("META", "Meta", "family of apps"),
    ("TSLA", "Tesla", "electric vehicles"),
    ("JPM", "JPMorgan", "consumer banking"),
    ("V", "Visa", "payment volume"),
    ("KO", "Coca-Cola", "sparkling beverages")
]

def filing_text(ticker: str, name: str, segment: str, year: int) -> str:
    return (
        f"{name} ({ticker}) annual report for fiscal {year}. "
        f"Total revenue of {name} grew {year % 7 + 2} percent, driven by {segment}. "
        f"Operating margin for {ticker} was {20 + year % 9} percent. "
        f"Risk factors for {name} include competition, regulation and supply constraints. "
        f"The board of {name} approved a dividend of {year % 5 + 1} dollars per share."
    )

def synthetic_documents(count: int = 20) -> List[Dict[str, str]]:
    documents = []
    for position in range(count):
        ticker, name, segment = COMPANIES[position % len(COMPANIES)]
        year = 2020 + position // len(COMPANIES)
        documents.append({
            "doc_id": f"{ticker.lower()}-10k-{year}",
            "ticker": ticker,
            "source_name": f"{ticker} 10-K {year}",
            "text": filing_text(ticker, name, segment, year)
        })
    return documents

def synthetic_queries(count: int = 20) -> List[Dict[str, str]]:
    queries = []
    for position in range(count):
        ticker, name, segment = COMPANIES[position % len(COMPANIES)]
        year = 2020 + position // len(COMPANIES)
        queries.append({
            "query_id": f"q{position:03d}",
            "query": f"What drove {name} revenue growth in fiscal {year}?",
            "ground_truth": f"{name} revenue grew {year % 7 + 2} percent, driven by {segment}."
        })
    return queries

@pytest.fixture
def offline_config() -> PipelineConfig:
    """
    Small windows, a 64-dim hashing embedder and the overlap scorer.
    """

    return PipelineConfig(
        chunking={"chunk_size": 200, "overlap": 100},
        embedder={"provider": "stub", "dim": 64},
        rerank={"scorer": "overlap"},
        max_concurrency=4
    )

@pytest.fixture
def synthetic_corpus(offline_config) -> Corpus:
    return ingest_corpus(synthetic_documents(), offline_config.chunking)

@pytest.fixture
def stub_engine(synthetic_corpus, offline_config) -> Engine:
    return Engine.build(synthetic_corpus, offline_config, stub=True)

@pytest.fixture
def write_jsonl_file(tmp_path):
    """
    Write records to a .jsonl file under tmp_path and return its path.
    """

    def write(name: str, records) -> Path:
        path = tmp_path / name
        path.write_text(
            "".join(json.dumps(record) + "\n" for record in records),
            encoding="utf-8"
        )
        return path

    return write

@pytest.fixture
def make_records():
    """
    Factory of unsampled QueryRecords for the synthetic corpus.
    """

    from finrag.eval import QueryRecord

    def make(count: int) -> List[QueryRecord]:
        return [QueryRecord(**query) for query in synthetic_queries(count)]

    return make

@pytest.fixture
def cli_files(tmp_path, offline_config, write_jsonl_file) -> Dict[str, Path]:
    """
    Config, document and query files for driving the CLI offline.
    """

    from finrag.config import save_config

    return {
        "config": save_config(offline_config, tmp_path / "finrag.json"),
        "documents": write_jsonl_file("documents.jsonl", synthetic_documents()),
        "queries": write_jsonl_file("queries.jsonl", synthetic_queries())
    }
