import threading
from typing import List
import pytest
from finrag.config import (
    PipelineConfig,
    constants as C
)
from finrag.corpus import ingest_corpus
from finrag.embeddings import (
    EmbeddingsFn,
    Utils
)
from finrag.errors import (
    DimensionMismatchError,
    IntegrityError,
    StageError,
    TransportError,
    ValidationError
)
from finrag.gateway import (
    GatewaySet,
    Generator,
    StubJudge,
    StubRewriter
)
from finrag.pipeline import (
    STAGES,
    Engine,
    answer_query,
    build_indexes,
    load_indexes,
    save_indexes
)
from finrag.rerank import RelevanceScorer

CLIFF_DOCS = [
    {"doc_id": "a", "text": "Apple revenue grew strongly."},
    {"doc_id": "b", "text": "Apple revenue was flat."},
    {"doc_id": "c", "text": "Apple revenue declined."}
]

class TableScorer(RelevanceScorer):
    def __init__(self, table):
        self.table = table

    def _score(self, query, texts):
        return [self.table[text] for text in texts]

class PolarEmbedding(EmbeddingsFn, Utils):
    """
    Maps the given query to (-1, 0) and everything else to (1, 0).
    """

    def __init__(self, query: str):
        super().__init__(dimension=2)
        self.query = query

    def _get_embedding(self, text: str) -> List[float]:
        return [-1.0, 0.0] if text == self.query else [1.0, 0.0]

class BrokenGenerator(Generator):
    def _generate(self, req):
        raise TransportError("endpoint down")

def _config(**changes) -> PipelineConfig:
    base = {
        "embedder": {"provider": "stub", "dim": 64},
        "rerank": {"scorer": "overlap"},
        "max_concurrency": 2
    }
    base.update(changes)
    return PipelineConfig(**base)

@pytest.fixture
def cliff_engine() -> Engine:
    cfg = _config()
    corpus = ingest_corpus(CLIFF_DOCS, cfg.chunking)
    scorer = TableScorer({
        "Apple revenue grew strongly.": 0.9,
        "Apple revenue was flat.": 0.7,
        "Apple revenue declined.": 0.6
    })
    return Engine.build(corpus, cfg, stub=True, scorer=scorer)

def test_cliff_shrinks_context_only_with_rerank(cliff_engine):
    answer, trace = cliff_engine.answer_query("How did Apple revenue develop?")
    assert trace.context_refs == ["a#000000"]
    assert answer == "Apple revenue grew strongly."
    assert (trace.mass_cutoff, trace.cliff_cutoff) == (2, 1)
    assert len(trace.rerank_candidates) == 3

    _, plain = cliff_engine.answer_query("How did Apple revenue develop?", enable_rerank=False)
    assert len(plain.context_refs) == 3
    assert len(trace.context_refs) <= len(plain.context_refs)
    assert plain.reranked == []

def test_trace_records_every_stage(cliff_engine):
    _, trace = answer_query(cliff_engine, "How did Apple revenue develop?")
    payload = trace.to_dict()
    assert payload["rewrite"] == {
        "clarified_query": "How did Apple revenue develop?",
        "keywords": ["apple", "revenue", "develop"]
    }
    assert [hit["rank"] for hit in payload["fts_hits"]] == [1, 2, 3]
    assert len(payload["fused"]) == 3
    assert payload["rerank"]["scores"][0] == {
        "chunk_ref": "a#000000",
        "raw_score": 0.9,
        "normalized_mass": pytest.approx(0.9 / 2.2)
    }
    assert payload["context_refs"] == ["a#000000"]

    _, plain = cliff_engine.answer_query("How did Apple revenue develop?", enable_rerank=False)
    assert plain.to_dict()["rerank"] is None

def test_no_match_gives_insufficient_context_answer():
    query = "Tesla deliveries?"
    cfg = _config(embedder={"provider": "stub", "dim": 2})
    corpus = ingest_corpus([{"doc_id": "a", "text": "Apple revenue grew."}], cfg.chunking)
    engine = Engine.build(corpus, cfg, stub=True, embedder=PolarEmbedding(query))

    for enable_rerank in (True, False):
        answer, trace = engine.answer_query(query, enable_rerank=enable_rerank)
        assert answer == C.INSUFFICIENT_CONTEXT_ANSWER
        assert trace.fts_hits == []
        assert trace.semantic_hits == []
        assert trace.fused == []
        assert trace.context_refs == []

def test_single_chunk_without_rerank():
    text = "Microsoft cloud revenue rose sharply. " * 10
    cfg = _config()
    corpus = ingest_corpus([{"doc_id": "m", "text": text}], cfg.chunking)
    engine = Engine.build(corpus, cfg, stub=True)
    answer, trace = engine.answer_query("Microsoft cloud revenue", enable_rerank=False)
    assert trace.context_refs == ["m#000000"]
    assert answer == text[:200]

def test_context_limit_without_rerank(stub_engine):
    _, trace = stub_engine.answer_query("What was the operating margin?", enable_rerank=False)
    assert 0 < len(trace.context_refs) <= stub_engine.cfg.no_rerank_context_limit
    assert trace.context_refs == [hit.chunk_ref for hit in trace.fused[:len(trace.context_refs)]]

def test_stub_engine_is_deterministic(stub_engine):
    first = stub_engine.answer_query("What drove Nvidia revenue growth in fiscal 2021?")
    second = stub_engine.answer_query("What drove Nvidia revenue growth in fiscal 2021?")
    assert first[0] == second[0]
    assert first[1].to_dict() == second[1].to_dict()

def test_answer_many_preserves_input_order(stub_engine):
    questions = [f"Risk factors for {name}" for name in ("Apple", "Coca-Cola", "Visa")]
    answers = stub_engine.answer_many(questions, max_workers=3)
    assert [answer for answer, _ in answers] == [stub_engine.answer_query(q)[0] for q in questions]
    assert [trace.query for _, trace in answers] == questions

def test_empty_query_is_rejected(stub_engine):
    with pytest.raises(ValidationError):
        stub_engine.answer_query("   ")

def test_stage_failures_are_attributed(synthetic_corpus, offline_config):
    gateways = GatewaySet(
        rewriter=StubRewriter(),
        generator=BrokenGenerator(),
        judge=StubJudge(),
        limiter=threading.BoundedSemaphore(2),
        stub=True
    )
    engine = Engine.build(synthetic_corpus, offline_config, stub=True, gateways=gateways)
    with pytest.raises(StageError) as info:
        engine.answer_query("Apple revenue")
    assert info.value.stage == "generate"
    assert isinstance(info.value.cause, TransportError)
    assert info.value.EXIT_CODE == TransportError.EXIT_CODE
    assert "generate" in STAGES

def test_artifacts_round_trip(tmp_path, synthetic_corpus, offline_config, stub_engine):
    synthetic_corpus.save(tmp_path / "store")
    fts, vectors = build_indexes(synthetic_corpus, offline_config, stub=True)
    hashes = save_indexes(fts, vectors, tmp_path / "index")
    assert sorted(hashes) == ["fts_index.json", "vectors.fvx"]

    loaded = Engine.from_artifacts(tmp_path / "store", tmp_path / "index", offline_config, stub=True)
    question = "What dividend did the board of Visa approve?"
    assert loaded.answer_query(question)[1].to_dict() == stub_engine.answer_query(question)[1].to_dict()

def test_artifacts_must_match_config_and_corpus(tmp_path, synthetic_corpus, offline_config):
    fts, vectors = build_indexes(synthetic_corpus, offline_config, stub=True)
    save_indexes(fts, vectors, tmp_path / "index")

    wider = offline_config.with_updates(embedder={"provider": "stub", "dim": 128})
    with pytest.raises(DimensionMismatchError):
        load_indexes(tmp_path / "index", synthetic_corpus, wider)

    other = ingest_corpus([{"doc_id": "x", "text": "unrelated"}], offline_config.chunking)
    with pytest.raises(IntegrityError):
        load_indexes(tmp_path / "index", other, offline_config)
