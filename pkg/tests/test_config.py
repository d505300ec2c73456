import json
import pytest
from finrag.config import (
    PipelineConfig,
    config_hash,
    load_config,
    resolve_secret,
    save_config
)
from finrag.errors import ConfigurationError

def test_defaults_match_the_production_setup():
    cfg = load_config()
    assert (cfg.chunking.chunk_size, cfg.chunking.overlap) == (2500, 1250)
    assert (cfg.bm25.k1, cfg.bm25.b) == (1.2, 0.75)
    assert (cfg.fts_top_k, cfg.semantic_top_k) == (20, 30)
    assert cfg.distance_threshold == 2.0
    assert cfg.fusion.k == 60
    assert cfg.rerank.max_candidates == 30
    assert cfg.rerank.cumulative_keep_mass == 0.55
    assert cfg.rerank.cliff_drop == 0.15
    assert cfg.no_rerank_context_limit == 10
    assert cfg.generator.temperature == 0.0
    assert cfg.embedder.dim == 1024
    assert cfg.stub_answer_chars == 200

def test_invalid_values_raise_configuration_error():
    with pytest.raises(ConfigurationError) as info:
        PipelineConfig(fts_top_k=0)
    assert "fts_top_k" in str(info.value)
    with pytest.raises(ConfigurationError):
        PipelineConfig(rerank={"cumulative_keep_mass": 1.5})
    with pytest.raises(ConfigurationError):
        PipelineConfig(distance_threshold=-1.0)
    with pytest.raises(ConfigurationError):
        PipelineConfig(unknown_field=True)

def test_save_and_load_round_trip(tmp_path):
    cfg = PipelineConfig(fts_top_k=7, rerank={"scorer": "overlap", "cliff_drop": 0.2})
    path = save_config(cfg, tmp_path / "finrag.json")
    assert load_config(path) == cfg
    assert config_hash(load_config(path)) == config_hash(cfg)

def test_partial_file_keeps_defaults(tmp_path):
    path = tmp_path / "partial.json"
    path.write_text(json.dumps({"chunking": {"chunk_size": 400, "overlap": 100}}), encoding="utf-8")
    cfg = load_config(path)
    assert cfg.chunking.stride == 300
    assert cfg.fts_top_k == 20

def test_config_hash_tracks_changes():
    assert config_hash(PipelineConfig()) == config_hash(PipelineConfig())
    assert config_hash(PipelineConfig()) != config_hash(PipelineConfig(semantic_top_k=31))

def test_bad_config_files(tmp_path):
    with pytest.raises(ConfigurationError):
        load_config(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_config(broken)
    listed = tmp_path / "list.json"
    listed.write_text("[]", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_config(listed)

def test_with_updates_revalidates():
    cfg = PipelineConfig().with_updates(fts_top_k=5)
    assert cfg.fts_top_k == 5
    with pytest.raises(ConfigurationError):
        cfg.with_updates(fts_top_k=0)

def test_resolve_secret_takes_first_set_variable(monkeypatch):
    monkeypatch.delenv("FINRAG_TEST_A", raising=False)
    monkeypatch.setenv("FINRAG_TEST_B", "second")
    assert resolve_secret(("FINRAG_TEST_A", "FINRAG_TEST_B")) == "second"
    monkeypatch.setenv("FINRAG_TEST_A", "first")
    assert resolve_secret(("FINRAG_TEST_A", "FINRAG_TEST_B")) == "first"
    assert resolve_secret(("FINRAG_TEST_MISSING",)) is None
