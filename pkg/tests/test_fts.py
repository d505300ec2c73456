import math
import random
from collections import Counter
import pytest
from finrag.config import Bm25Params
from finrag.corpus import ingest_corpus
from finrag.errors import (
    DuplicateIdError,
    IndexFormatError,
    ValidationError
)
from finrag.fts import (
    FtsIndex,
    build_fts,
    query_terms,
    search_fts
)
from finrag.text import tokenize

def _index(texts):
    index = FtsIndex()
    for position, text in enumerate(texts):
        index.add_chunk(f"c{position}", text)
    return index

@pytest.fixture
def fruit_index() -> FtsIndex:
    return _index(["apple banana", "apple apple", "cherry"])

def test_fruit_statistics(fruit_index):
    assert fruit_index.total_docs == 3
    assert fruit_index.avg_doc_length == pytest.approx(5 / 3)

def test_apple_hand_scores(fruit_index):
    hits = search_fts(fruit_index, ["apple"], 20)
    assert [hit.chunk_ref for hit in hits] == ["c1", "c0"]
    assert [hit.rank for hit in hits] == [1, 2]

    idf = math.log(1.6)
    norm = 0.25 + 0.75 * 2 / (5 / 3)
    assert hits[0].score == pytest.approx(idf * 2 * 2.2 / (2 + 1.2 * norm), abs=1e-12)
    assert hits[0].score == pytest.approx(0.611839, abs=1e-6)
    assert hits[1].score == pytest.approx(0.434458, abs=1e-6)

def test_unique_term_match(fruit_index):
    hits = search_fts(fruit_index, ["cherry"], 20)
    assert [(hit.chunk_ref, hit.rank) for hit in hits] == [("c2", 1)]

def test_absent_term_and_empty_keywords(fruit_index):
    assert search_fts(fruit_index, ["durian"], 20) == []
    assert search_fts(fruit_index, [], 20) == []

def test_top_k_must_be_positive(fruit_index):
    with pytest.raises(ValidationError):
        search_fts(fruit_index, ["apple"], 0)

def test_keywords_are_or_combined(fruit_index):
    hits = search_fts(fruit_index, ["banana", "cherry"], 20)
    assert sorted(hit.chunk_ref for hit in hits) == ["c0", "c2"]

def test_top_k_truncation(fruit_index):
    assert len(search_fts(fruit_index, ["apple", "cherry"], 2)) == 2
    assert len(search_fts(fruit_index, ["apple", "cherry"], 10)) == 3

def test_higher_term_frequency_never_ranks_lower():
    index = _index(["x y y", "x x y"])
    hits = search_fts(index, ["x"], 5)
    assert [hit.chunk_ref for hit in hits] == ["c1", "c0"]

def test_ties_break_by_chunk_id():
    index = FtsIndex()
    for ref in ("b", "c", "a"):
        index.add_chunk(ref, "same words here")
    assert [hit.chunk_ref for hit in search_fts(index, ["words"], 3)] == ["a", "b", "c"]

def test_multi_word_keywords_contribute_each_token():
    assert query_terms(["Net income", "income", "EBITDA"]) == ["net", "income", "ebitda"]

def test_duplicate_chunk_is_rejected(fruit_index):
    with pytest.raises(DuplicateIdError):
        fruit_index.add_chunk("c0", "again")

def test_empty_corpus(offline_config):
    index = build_fts(ingest_corpus([], offline_config.chunking))
    assert len(index) == 0
    assert index.avg_doc_length == 0.0
    assert search_fts(index, ["revenue"], 20) == []

def test_rebuild_is_deterministic(synthetic_corpus):
    first = build_fts(synthetic_corpus)
    second = build_fts(synthetic_corpus)
    assert first.statistics() == second.statistics()
    assert first.to_payload() == second.to_payload()

def _brute_force(texts, keywords, top_k, params):
    counts = {f"c{i}": Counter(tokenize(text)) for i, text in enumerate(texts)}
    lengths = {ref: sum(counter.values()) for ref, counter in counts.items()}
    total = len(texts)
    avg = sum(lengths.values()) / total
    scores = {}
    for term in query_terms(keywords):
        df = sum(1 for counter in counts.values() if counter[term] > 0)
        if df == 0:
            continue
        idf = math.log(1.0 + (total - df + 0.5) / (df + 0.5))
        for ref, counter in counts.items():
            tf = counter[term]
            if tf == 0:
                continue
            norm = 1.0 - params.b + params.b * (lengths[ref] / avg) if avg > 0 else 1.0
            scores[ref] = scores.get(ref, 0.0) + idf * (tf * (params.k1 + 1.0)) / (tf + params.k1 * norm)
    ranked = sorted(
        ((ref, score) for ref, score in scores.items() if score > 0.0),
        key=lambda item: (-item[1], item[0])
    )
    return ranked[:top_k]

def test_matches_exhaustive_bm25_on_random_corpora():
    rng = random.Random(7)
    vocabulary = [f"w{i}" for i in range(20)]
    params = Bm25Params()
    for _ in range(200):
        texts = [
            " ".join(rng.choices(vocabulary, k=rng.randint(0, 15)))
            for _ in range(rng.randint(1, 100))
        ]
        keywords = rng.sample(vocabulary + ["absent"], rng.randint(1, 4))
        top_k = rng.randint(1, 30)

        expected = _brute_force(texts, keywords, top_k, params)
        hits = search_fts(_index(texts), keywords, top_k)
        assert [(hit.chunk_ref, hit.score) for hit in hits] == expected
        assert [hit.rank for hit in hits] == list(range(1, len(expected) + 1))

def test_save_and_load_reproduce_bytes(tmp_path, synthetic_corpus):
    index = build_fts(synthetic_corpus)
    first = index.save(tmp_path / "fts.json")
    loaded = FtsIndex.load(first)
    second = loaded.save(tmp_path / "again.json")

    assert first.read_bytes() == second.read_bytes()
    assert search_fts(loaded, ["revenue", "apple"], 20) == search_fts(index, ["revenue", "apple"], 20)

def test_load_rejects_foreign_files(tmp_path):
    path = tmp_path / "other.json"
    path.write_text('{"format": "something-else"}', encoding="utf-8")
    with pytest.raises(IndexFormatError):
        FtsIndex.load(path)
