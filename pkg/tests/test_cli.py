import json
import pytest
from typer.testing import CliRunner
from finrag import __version__
from finrag.cli import (
    app,
    main
)
from finrag.corpus import Corpus
from finrag.errors import UsageError

runner = CliRunner()

def _invoke(cli_files, *args):
    return runner.invoke(app, ["--config", str(cli_files["config"]), *map(str, args)])

@pytest.fixture
def indexed(tmp_path, cli_files):
    """
    Chunk store and indexes of the synthetic corpus, built through the CLI.
    """

    store, index = tmp_path / "store", tmp_path / "index"
    result = _invoke(cli_files, "ingest", "--corpus", cli_files["documents"], "--out", store)
    assert result.exit_code == 0, result.output
    result = _invoke(cli_files, "build-index", "--store", store, "--out", index, "--stub-gateways")
    assert result.exit_code == 0, result.output
    return store, index

def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert f"finrag {__version__}" in result.output

def test_ingest_with_default_chunking(tmp_path, write_jsonl_file):
    corpus = write_jsonl_file("two.jsonl", [
        {"doc_id": "a", "text": "a" * 5000},
        {"doc_id": "b", "text": "b" * 5000}
    ])
    result = runner.invoke(app, ["ingest", "--corpus", str(corpus), "--out", str(tmp_path / "store")])
    assert result.exit_code == 0, result.output
    assert len(Corpus.load(tmp_path / "store").chunks) == 6

    manifest = json.loads((tmp_path / "store" / "run_manifest.json").read_text(encoding="utf-8"))
    assert manifest["command"] == "ingest"
    assert manifest["tool_version"] == __version__
    assert len(manifest["config_hash"]) == 64

def test_build_index_writes_both_indexes(indexed):
    _, index = indexed
    assert (index / "fts_index.json").is_file()
    assert (index / "vectors.fvx").is_file()
    manifest = json.loads((index / "run_manifest.json").read_text(encoding="utf-8"))
    assert sorted(manifest["index_hashes"]) == ["fts_index.json", "vectors.fvx"]

def test_query_is_deterministic_with_stub_gateways(cli_files, indexed):
    store, index = indexed
    args = ("query", "What drove Apple revenue growth in fiscal 2020?",
            "--store", store, "--index", index, "--stub-gateways")
    first = _invoke(cli_files, *args)
    second = _invoke(cli_files, *args)
    assert first.exit_code == 0, first.output
    assert first.output == second.output
    assert first.output.strip()

def test_query_trace_is_json(cli_files, indexed):
    store, index = indexed
    result = _invoke(cli_files, "query", "Apple dividend", "--store", store, "--index", index,
                     "--stub-gateways", "--no-rerank", "--trace")
    assert result.exit_code == 0, result.output
    assert '"context_refs"' in result.output
    assert '"rerank": null' in result.output

def test_ablate_writes_results(tmp_path, cli_files, indexed):
    store, index = indexed
    out = tmp_path / "ablation"
    result = _invoke(cli_files, "--seed", 3, "ablate", "--dataset", cli_files["queries"],
                     "--store", store, "--index", index, "--out", out,
                     "--groups", 2, "--group-size", 10, "--stub-gateways")
    assert result.exit_code == 0, result.output

    assert len((out / "scores.jsonl").read_text(encoding="utf-8").splitlines()) == 40
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["command"] == "ablate"
    assert manifest["seed"] == 3
    assert manifest["extras"]["excluded"] == {"with_rerank": 0, "without_rerank": 0}

def test_eval_with_missing_dataset_exits_with_io_status(tmp_path, cli_files, indexed):
    store, index = indexed
    result = _invoke(cli_files, "eval", "--dataset", tmp_path / "missing.jsonl",
                     "--store", store, "--index", index, "--stub-gateways")
    assert result.exit_code == 3

def test_eval_with_too_few_queries_exits_with_data_status(tmp_path, cli_files, indexed):
    store, index = indexed
    result = _invoke(cli_files, "eval", "--dataset", cli_files["queries"], "--store", store,
                     "--index", index, "--out", tmp_path / "out", "--stub-gateways")
    assert result.exit_code == 2

def test_missing_config_file_exits_with_config_status(tmp_path):
    result = runner.invoke(app, ["--config", str(tmp_path / "nope.json"), "ingest",
                                 "--corpus", "x", "--out", "y"])
    assert result.exit_code == 2

def test_main_maps_usage_errors_to_status_one():
    with pytest.raises(SystemExit) as info:
        main(["query", "--no-such-option"])
    assert info.value.code == 1

@pytest.mark.parametrize("argv", [["--no-such-option"], ["frobnicate"], ["ingest"]])
def test_main_reports_bad_invocations_as_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == UsageError.EXIT_CODE == 1
    assert UsageError.CODE in capsys.readouterr().err

def test_main_returns_error_status(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["ingest", "--corpus", str(tmp_path / "missing.jsonl"), "--out", str(tmp_path / "store")])
    assert info.value.code == 3

def test_main_version_exits_cleanly():
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
