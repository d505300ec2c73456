import random
import numpy as np
import pytest
from finrag.config import EmbedderSpec
from finrag.embeddings import get_embedding_function
from finrag.errors import (
    DimensionMismatchError,
    DuplicateIdError,
    IndexFormatError,
    IntegrityError,
    ValidationError
)
from finrag.vector import (
    VectorIndex,
    add_vectors,
    build_vector_index,
    search_vectors
)
from finrag.vector.mixins.utils import DISTANCE_TOLERANCE

def _random_index(rng: random.Random, count: int, dim: int):
    vectors = [[rng.uniform(-1.0, 1.0) for _ in range(dim)] for _ in range(count)]
    refs = [f"chunk-{rng.randrange(10 ** 6):06d}-{position}" for position in range(count)]
    index = add_vectors(VectorIndex(dim=dim), list(zip(refs, vectors)))
    return index, refs, vectors

def _brute_force(refs, vectors, query, top_k, threshold):
    stored = [np.asarray(vector, dtype=np.float32).astype(np.float64) for vector in vectors]
    target = np.asarray(query, dtype=np.float32).astype(np.float64)
    scored = []
    for ref, vector in zip(refs, stored):
        distance = sum(float(a - b) ** 2 for a, b in zip(vector, target))
        if distance <= threshold + DISTANCE_TOLERANCE:
            scored.append((ref, distance))
    scored.sort(key=lambda item: (item[1], item[0]))
    return scored[:top_k]

def test_matches_exhaustive_scan_on_random_indexes():
    rng = random.Random(11)
    for _ in range(200):
        dim = rng.randint(1, 64)
        index, refs, vectors = _random_index(rng, rng.randint(1, 100), dim)
        query = [rng.uniform(-1.0, 1.0) for _ in range(dim)]
        top_k = rng.randint(1, 25)
        threshold = rng.choice([float(dim), rng.uniform(0.0, 2.0 * dim)])

        expected = _brute_force(refs, vectors, query, top_k, threshold)
        hits = search_vectors(index, query, top_k, threshold)
        assert [hit.chunk_ref for hit in hits] == [ref for ref, _ in expected]
        assert [hit.score for hit in hits] == pytest.approx([score for _, score in expected], abs=1e-9)
        assert [hit.rank for hit in hits] == list(range(1, len(hits) + 1))

def test_identity_query_is_at_distance_zero():
    rng = random.Random(3)
    index, refs, vectors = _random_index(rng, 30, 16)
    hits = search_vectors(index, vectors[12], 5, 2.0)
    assert hits[0].chunk_ref == refs[12]
    assert hits[0].score == 0.0
    assert hits[0].rank == 1

def test_orthonormal_pair_sits_on_the_inclusive_threshold():
    index = add_vectors(VectorIndex(dim=2), [("x", [1.0, 0.0]), ("y", [0.0, 1.0])])
    hits = search_vectors(index, [1.0, 0.0], 5, 2.0)
    assert [(hit.chunk_ref, hit.score) for hit in hits] == [("x", 0.0), ("y", 2.0)]

    assert [hit.chunk_ref for hit in search_vectors(index, [1.0, 0.0], 5, 1.999)] == ["x"]

def test_rotated_orthonormal_pairs_stay_on_the_threshold():
    rng = np.random.default_rng(16)
    for _ in range(500):
        basis, _ = np.linalg.qr(rng.standard_normal((16, 16)))
        u, v = basis[:, 0].tolist(), basis[:, 1].tolist()
        index = add_vectors(VectorIndex(dim=16), [("v", v)])
        hits = search_vectors(index, u, 5, 2.0)
        assert [hit.chunk_ref for hit in hits] == ["v"]
        assert hits[0].score == pytest.approx(2.0, abs=1e-5)

def test_stub_embedded_texts_without_shared_tokens_are_kept():
    embedder = get_embedding_function("stub", dimension=64)
    for size in (6, 9, 11):
        left = " ".join(f"left{position}" for position in range(size))
        right = " ".join(f"right{position}" for position in range(size))
        query, stored = embedder.embed([left, right])
        index = add_vectors(VectorIndex(dim=64), [("right", stored)])
        assert [hit.chunk_ref for hit in search_vectors(index, query, 1, 2.0)] == ["right"]

def test_results_outside_threshold_are_dropped():
    index = add_vectors(VectorIndex(dim=2), [("far", [1.0, 0.0])])
    assert search_vectors(index, [-1.0, 0.0], 5, 2.0) == []

def test_threshold_is_monotone():
    rng = random.Random(5)
    index, _, _ = _random_index(rng, 60, 8)
    query = [rng.uniform(-1.0, 1.0) for _ in range(8)]
    previous = set()
    for threshold in (0.5, 1.0, 2.0, 4.0, 8.0, 16.0):
        current = {hit.chunk_ref for hit in search_vectors(index, query, 60, threshold)}
        assert previous <= current
        previous = current

def test_ties_break_by_ref():
    index = add_vectors(VectorIndex(dim=2), [("b", [0.0, 1.0]), ("a", [1.0, 0.0]), ("c", [0.0, -1.0])])
    hits = search_vectors(index, [0.0, 0.0], 3, 2.0)
    assert [hit.chunk_ref for hit in hits] == ["a", "b", "c"]

def test_truncates_after_filtering():
    index = add_vectors(VectorIndex(dim=1), [(f"r{i}", [float(i)]) for i in range(10)])
    hits = search_vectors(index, [0.0], 3, 100.0)
    assert [hit.chunk_ref for hit in hits] == ["r0", "r1", "r2"]

def test_duplicate_ref_leaves_index_unchanged():
    index = add_vectors(VectorIndex(dim=2), [("a", [1.0, 0.0])])
    with pytest.raises(DuplicateIdError):
        add_vectors(index, [("b", [0.0, 1.0]), ("a", [0.5, 0.5])])
    assert len(index) == 1
    assert "b" not in index

def test_wrong_dimension_is_rejected():
    index = VectorIndex(dim=3)
    with pytest.raises(DimensionMismatchError):
        add_vectors(index, [("a", [1.0, 0.0])])
    add_vectors(index, [("a", [1.0, 0.0, 0.0])])
    with pytest.raises(DimensionMismatchError):
        search_vectors(index, [1.0, 0.0], 1, 2.0)

def test_non_finite_vectors_are_rejected():
    with pytest.raises(IntegrityError):
        add_vectors(VectorIndex(dim=2), [("a", [float("nan"), 0.0])])

def test_invalid_search_arguments():
    index = add_vectors(VectorIndex(dim=1), [("a", [0.0])])
    with pytest.raises(ValidationError):
        search_vectors(index, [0.0], 0, 2.0)
    with pytest.raises(ValidationError):
        search_vectors(index, [0.0], 1, -0.1)
    with pytest.raises(ValidationError):
        VectorIndex(dim=0)

def test_empty_index_returns_nothing():
    assert search_vectors(VectorIndex(dim=4), [0.0] * 4, 5, 2.0) == []

def test_bytes_round_trip(tmp_path):
    rng = random.Random(9)
    index, refs, _ = _random_index(rng, 25, 12)
    path = index.save(tmp_path / "vectors.fvx")
    loaded = VectorIndex.load(path)

    assert loaded.refs == refs
    assert loaded.to_bytes() == path.read_bytes()
    query = [0.1] * 12
    assert search_vectors(loaded, query, 10, 24.0) == search_vectors(index, query, 10, 24.0)

def test_foreign_and_truncated_files_are_rejected():
    raw = add_vectors(VectorIndex(dim=2), [("a", [1.0, 0.0])]).to_bytes()
    with pytest.raises(IndexFormatError):
        VectorIndex.from_bytes(b"NOTMAGIC" + raw[8:])
    with pytest.raises(IndexFormatError):
        VectorIndex.from_bytes(raw[:-1])
    with pytest.raises(IndexFormatError):
        VectorIndex.from_bytes(raw[:4])

def test_build_embeds_every_chunk(synthetic_corpus):
    embedder = get_embedding_function("stub", dimension=64)
    index = build_vector_index(synthetic_corpus, embedder, EmbedderSpec(provider="stub", dim=64, batch_size=7))
    assert index.refs == [chunk.chunk_id for chunk in synthetic_corpus.chunks]

    chunk = synthetic_corpus.chunks[4]
    hits = search_vectors(index, embedder.embed([chunk.text])[0], 1, 2.0)
    assert hits[0].chunk_ref == chunk.chunk_id
