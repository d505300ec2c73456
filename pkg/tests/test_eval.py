import statistics
import pytest
from finrag.config import ChunkingConfig
from finrag.corpus import ingest_corpus
from finrag.errors import (
    DuplicateIdError,
    InsufficientDataError,
    RecordFormatError,
    TransportError,
    ValidationError
)
from finrag.eval import (
    CONFIG_WITH_RERANK,
    CONFIG_WITHOUT_RERANK,
    GroupMetrics,
    QueryRecord,
    ScoreRecord,
    aggregate_metrics,
    compute_group_metrics,
    groups_of,
    load_dataset,
    render_table,
    round_half_up,
    rounded_metrics,
    run_ablation,
    run_evaluation,
    sample_groups,
    summary_lines,
    write_report
)
from finrag.gateway import StubJudge
from finrag.pipeline import Engine

# published per-group rows: avg, =1 %, >=8 %, =10 %
WITH_RERANK_ROWS = [
    (5.85, 24.3, 47.7, 12.0),
    (6.17, 21.7, 51.6, 16.0),
    (5.64, 25.7, 44.0, 14.0),
    (6.21, 21.0, 51.3, 14.7),
    (6.21, 20.0, 50.6, 12.3)
]
WITHOUT_RERANK_ROWS = [
    (4.64, 37.7, 22.7, 8.7),
    (4.98, 34.7, 36.0, 10.0),
    (4.83, 37.0, 34.0, 12.7),
    (5.21, 33.7, 37.6, 11.3),
    (5.07, 33.3, 37.0, 8.3)
]

def _group(row) -> GroupMetrics:
    avg, pct_1, pct_ge8, pct_10 = row
    return GroupMetrics(avg, pct_1, pct_ge8, pct_10, n=300)

def _scores(values, group_id=1, config=CONFIG_WITH_RERANK):
    return [
        ScoreRecord(f"q{position:04d}", config, group_id, value, "answer")
        for position, value in enumerate(values)
    ]

class FailingJudge(StubJudge):
    def __init__(self, failing_question: str):
        self.failing_question = failing_question

    def _judge(self, question, candidate, ground_truth):
        if question == self.failing_question:
            raise TransportError("judge endpoint down")
        return super()._judge(question, candidate, ground_truth)

def test_aggregates_reproduce_published_averages():
    with_rerank = aggregate_metrics([_group(row) for row in WITH_RERANK_ROWS]).metrics
    without_rerank = aggregate_metrics([_group(row) for row in WITHOUT_RERANK_ROWS]).metrics

    assert with_rerank.avg_score == pytest.approx(6.02, abs=0.005)
    assert without_rerank.avg_score == pytest.approx(4.95, abs=0.005)
    assert with_rerank.pct_score_1 == pytest.approx(22.5, abs=0.05)
    assert without_rerank.pct_score_1 == pytest.approx(35.3, abs=0.05)
    assert with_rerank.pct_score_ge8 == pytest.approx(49.0, abs=0.05)
    assert without_rerank.pct_score_ge8 == pytest.approx(33.5, abs=0.05)
    assert with_rerank.pct_score_10 == pytest.approx(13.8, abs=0.25)
    assert without_rerank.pct_score_10 == pytest.approx(10.2, abs=0.25)
    assert with_rerank.n == 1500

def test_dispersion_of_group_averages():
    aggregate = aggregate_metrics([_group(row) for row in WITH_RERANK_ROWS])
    averages = [row[0] for row in WITH_RERANK_ROWS]
    assert aggregate.std_dev == pytest.approx(statistics.pstdev(averages))
    assert aggregate.std_dev == pytest.approx(0.2315, abs=0.0005)
    assert aggregate.std_dev == pytest.approx(0.24, abs=0.03)
    assert aggregate.sample_std_dev == pytest.approx(0.24, abs=0.03)
    assert aggregate.groups == 5

def test_single_group_has_zero_sample_spread():
    aggregate = aggregate_metrics([_group(WITH_RERANK_ROWS[0])])
    assert aggregate.std_dev == 0.0
    assert aggregate.sample_std_dev == 0.0

def test_group_metrics_from_constructed_score_multiset():
    values = [1] * 73 + [5] * 61 + [7] * 23 + [8] * 107 + [10] * 36
    metrics = compute_group_metrics(_scores(values))
    assert metrics.n == 300
    assert rounded_metrics(metrics) == {
        "avg_score": 5.85,
        "pct_score_1": 24.3,
        "pct_score_ge8": 47.7,
        "pct_score_10": 12.0,
        "n": 300
    }

def test_group_metrics_small_example():
    metrics = compute_group_metrics(_scores([1, 10, 8, 5]))
    assert metrics == GroupMetrics(6.0, 25.0, 50.0, 25.0, 4)

def test_group_metrics_rejects_empty_and_mixed_input():
    with pytest.raises(InsufficientDataError):
        compute_group_metrics([])
    with pytest.raises(InsufficientDataError):
        aggregate_metrics([])
    mixed = _scores([5]) + _scores([6], group_id=2)
    with pytest.raises(ValidationError):
        compute_group_metrics(mixed)

def test_round_half_up():
    assert round_half_up(24.25) == 24.3
    assert round_half_up(2.675, 2) == 2.68
    assert round_half_up(-0.05) == -0.1
    assert round_half_up(47.666666, 1) == 47.7

def test_sampling_is_seeded_and_disjoint(make_records):
    records = make_records(20)
    grouped = sample_groups(records, n_groups=2, group_size=10, seed=42)
    assert grouped == sample_groups(records, n_groups=2, group_size=10, seed=42)
    assert groups_of(grouped) == [1, 2]
    assert [record.group_id for record in grouped] == [1] * 10 + [2] * 10
    assert len({record.query_id for record in grouped}) == 20

    subset = sample_groups(records, n_groups=3, group_size=4, seed=1)
    assert len(subset) == 12
    assert sample_groups(records, n_groups=3, group_size=4, seed=2) != subset

def test_sampling_rejects_bad_requests(make_records):
    records = make_records(5)
    with pytest.raises(InsufficientDataError):
        sample_groups(records, n_groups=2, group_size=3)
    with pytest.raises(ValidationError):
        sample_groups(records, n_groups=0, group_size=3)
    with pytest.raises(DuplicateIdError):
        sample_groups(records + records[:1], n_groups=1, group_size=2)

def test_load_plain_and_finder_layouts(write_jsonl_file):
    path = write_jsonl_file("mixed.jsonl", [
        {"query_id": "p1", "query": "Apple revenue?", "ground_truth": "Up 6 percent."},
        {"_id": "f1", "text": "Visa volume?", "answer": "Grew.", "category": "Financials", "reasoning": "n/a"},
        {"id": 7, "query": "Meta apps?", "answer": "Family of apps."}
    ])
    records = load_dataset(path)
    assert [record.query_id for record in records] == ["p1", "f1", "7"]
    assert records[1] == QueryRecord("f1", "Visa volume?", "Grew.", category="Financials")
    assert all(record.group_id == 0 for record in records)

def test_load_rejects_malformed_datasets(write_jsonl_file):
    missing = write_jsonl_file("missing.jsonl", [
        {"query_id": "a", "query": "q", "ground_truth": "t"},
        {"query_id": "b", "query": "q"}
    ])
    with pytest.raises(RecordFormatError) as info:
        load_dataset(missing)
    assert info.value.line_number == 2

    repeated = write_jsonl_file("repeated.jsonl", [
        {"query_id": "a", "query": "q", "ground_truth": "t"},
        {"query_id": "a", "query": "q2", "ground_truth": "t2"}
    ])
    with pytest.raises(DuplicateIdError):
        load_dataset(repeated)
    with pytest.raises(ValidationError):
        load_dataset(repeated, "csv")

def test_ablation_is_byte_identical_across_runs(tmp_path, stub_engine, make_records):
    grouped = sample_groups(make_records(20), n_groups=2, group_size=10, seed=0)
    first = run_ablation(stub_engine, grouped)
    second = run_ablation(stub_engine, grouped, max_workers=1)

    write_report(first, tmp_path / "one")
    write_report(second, tmp_path / "two")
    for name in ("scores.jsonl", "traces.jsonl", "failures.jsonl", "metrics.json"):
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()

    assert first.excluded == {CONFIG_WITH_RERANK: 0, CONFIG_WITHOUT_RERANK: 0}
    for config in (CONFIG_WITH_RERANK, CONFIG_WITHOUT_RERANK):
        result = first.results[config]
        assert len(result.scores) == 20
        assert sorted(result.group_metrics) == [1, 2]
        assert result.aggregate.metrics.n == 20
    assert sorted(first.comparison.group_deltas) == [1, 2]

def test_rerank_off_traces_have_no_rerank_block(stub_engine, make_records):
    grouped = sample_groups(make_records(4), n_groups=1, group_size=4)
    result = run_evaluation(stub_engine, grouped, enable_rerank=False)
    assert all(trace["rerank"] is None for trace in result.traces)
    assert all(trace["config"] == CONFIG_WITHOUT_RERANK for trace in result.traces)
    assert [score.query_id for score in result.scores] == sorted(record.query_id for record in grouped)

def test_exact_answers_score_ten_everywhere(offline_config):
    text = "Visa payment volume grew eleven percent across consumer credit and debit. " * 5
    corpus = ingest_corpus([{"doc_id": "visa", "text": text}], ChunkingConfig())
    assert len(corpus.chunks) == 1
    engine = Engine.build(corpus, offline_config, stub=True)
    answer = corpus.chunks[0].text[:200]
    grouped = [
        QueryRecord(f"v{position}", f"How did Visa payment volume change? ({position})", answer, group_id=1)
        for position in range(3)
    ]
    for enable_rerank in (True, False):
        result = run_evaluation(engine, grouped, enable_rerank=enable_rerank)
        assert [score.score for score in result.scores] == [10, 10, 10]
        assert result.group_metrics[1].pct_score_10 == 100.0

    report = run_ablation(engine, grouped)
    for config in (CONFIG_WITH_RERANK, CONFIG_WITHOUT_RERANK):
        assert report.results[config].aggregate.metrics.pct_score_10 == 100.0

def test_judge_failures_are_excluded_and_counted(stub_engine, make_records):
    grouped = sample_groups(make_records(10), n_groups=1, group_size=10)
    failing = grouped[3]
    result = run_evaluation(stub_engine, grouped, judge=FailingJudge(failing.query))

    assert result.excluded == 1
    assert result.failures[0].query_id == failing.query_id
    assert result.failures[0].stage == "judge"
    assert result.group_metrics[1].n == 9
    assert failing.query_id not in {score.query_id for score in result.scores}

def test_report_rendering(tmp_path, stub_engine, make_records):
    grouped = sample_groups(make_records(6), n_groups=2, group_size=3)
    report = run_ablation(stub_engine, grouped)
    table = render_table(report)
    assert table.row_count == 2 * 2 + 2
    lines = summary_lines(report)
    assert any("std dev of group averages" in line for line in lines)
    assert any(line.startswith("Reranking changes avg score") for line in lines)

    paths = write_report(report, tmp_path / "out", manifest={"command": "ablate"})
    assert paths["manifest"].read_text(encoding="utf-8").startswith("{")
    assert len(paths["scores"].read_text(encoding="utf-8").splitlines()) == 12
