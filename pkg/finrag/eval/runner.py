"""
Module containing run_evaluation and run_ablation, which answer and judge grouped queries.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import (
    dataclass,
    field
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
    Union
)
from finrag.errors import (
    FinragError,
    StageError
)
from finrag.eval.metrics import (
    aggregate_metrics,
    compute_group_metrics
)
from finrag.eval.types import (
    CONFIG_WITH_RERANK,
    CONFIG_WITHOUT_RERANK,
    AggregateMetrics,
    GroupMetrics,
    QueryFailure,
    QueryRecord,
    ScoreRecord,
    config_label
)
from finrag.gateway import (
    Judge,
    judge_answer
)
from finrag.pipeline import Engine

logger = logging.getLogger(__name__)

@dataclass
class EvaluationResult:
    """
    Scores, traces and metrics of one configuration.
    """

    config: str
    scores: List[ScoreRecord] = field(default_factory=list)
    traces: List[Dict[str, Any]] = field(default_factory=list)
    failures: List[QueryFailure] = field(default_factory=list)
    group_metrics: Dict[int, GroupMetrics] = field(default_factory=dict)
    aggregate: Optional[AggregateMetrics] = None

    @property
    def excluded(self) -> int:
        return len(self.failures)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config,
            "excluded": self.excluded,
            "groups": {str(group): metrics.to_dict() for group, metrics in self.group_metrics.items()},
            "aggregate": self.aggregate.to_dict() if self.aggregate else None
        }

@dataclass
class ConfigComparison:
    """
    With-rerank minus without-rerank, per group and on the aggregate.
    """

    group_deltas: Dict[int, Dict[str, float]]
    aggregate_delta: Dict[str, float]
    relative_change_pct: Dict[str, Optional[float]]
    avg_improvement_range: Tuple[float, float]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "group_deltas": {str(group): delta for group, delta in self.group_deltas.items()},
            "aggregate_delta": self.aggregate_delta,
            "relative_change_pct": self.relative_change_pct,
            "avg_improvement_range": list(self.avg_improvement_range)
        }

@dataclass
class AblationReport:
    results: Dict[str, EvaluationResult]
    comparison: Optional[ConfigComparison] = None

    @property
    def excluded(self) -> Dict[str, int]:
        return {config: result.excluded for config, result in self.results.items()}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "results": {config: result.to_dict() for config, result in self.results.items()},
            "comparison": self.comparison.to_dict() if self.comparison else None
        }

_Outcome = Tuple[QueryRecord, Union[Tuple[ScoreRecord, Dict[str, Any]], QueryFailure]]

def _evaluate_one(
    engine: Engine,
    judge: Judge,
    record: QueryRecord,
    config: str,
    enable_rerank: bool
) -> _Outcome:
    try:
        answer, trace = engine.answer_query(record.query, enable_rerank)
    except FinragError as exc:
        stage = exc.stage if isinstance(exc, StageError) else "input"
        logger.warning("query %s failed in %s (%s): %s", record.query_id, stage, config, exc)
        return record, QueryFailure(record.query_id, config, record.group_id, stage, str(exc))
    try:
        verdict = judge_answer(judge, record.query, answer, record.ground_truth)
    except FinragError as exc:
        logger.warning("judge failed for query %s (%s): %s", record.query_id, config, exc)
        return record, QueryFailure(record.query_id, config, record.group_id, "judge", str(exc))

    score = ScoreRecord(
        query_id=record.query_id,
        config=config,
        group_id=record.group_id,
        score=verdict.score,
        answer=answer,
        rationale=verdict.rationale
    )
    trace_row = {"query_id": record.query_id, "config": config, "group_id": record.group_id}
    trace_row.update(trace.to_dict())
    return record, (score, trace_row)

def run_evaluation(
    engine: Engine,
    grouped: Sequence[QueryRecord],
    enable_rerank: bool = True,
    judge: Optional[Judge] = None,
    max_workers: Optional[int] = None
) -> EvaluationResult:
    """
    Answer and judge every grouped query under one configuration.

    Queries run concurrently; the results are folded in (group, query_id)
    order so the output does not depend on scheduling. Queries whose pipeline
    or judge call fails are recorded as failures and left out of the metrics.

    Args:
        engine: Query engine
        grouped: Records with group ids
        enable_rerank: Configuration to run
        judge: Judge role; the engine's judge by default
        max_workers: Concurrent queries; cfg.max_concurrency by default

    Returns:
        EvaluationResult
    """

    judge = judge or engine.gateways.judge
    config = config_label(enable_rerank)
    workers = max_workers or engine.cfg.max_concurrency
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(
            lambda record: _evaluate_one(engine, judge, record, config, enable_rerank),
            grouped
        ))
    outcomes.sort(key=lambda item: (item[0].group_id, item[0].query_id))

    result = EvaluationResult(config=config)
    for _, outcome in outcomes:
        if isinstance(outcome, QueryFailure):
            result.failures.append(outcome)
        else:
            score, trace_row = outcome
            result.scores.append(score)
            result.traces.append(trace_row)

    by_group: Dict[int, List[ScoreRecord]] = {}
    for score in result.scores:
        by_group.setdefault(score.group_id, []).append(score)
    result.group_metrics = {
        group: compute_group_metrics(scores) for group, scores in sorted(by_group.items())
    }
    if result.group_metrics:
        result.aggregate = aggregate_metrics(list(result.group_metrics.values()))
    logger.info(
        "%s: %d scored, %d excluded",
        config,
        len(result.scores),
        result.excluded
    )
    return result

METRIC_FIELDS = ("avg_score", "pct_score_1", "pct_score_ge8", "pct_score_10")

def compare_configs(
    with_rerank: EvaluationResult,
    without_rerank: EvaluationResult
) -> Optional[ConfigComparison]:
    """
    Per-group and aggregate metric changes from adding the rerank stage.

    Returns:
        None when either configuration has no metrics
    """

    if with_rerank.aggregate is None or without_rerank.aggregate is None:
        return None

    shared = sorted(set(with_rerank.group_metrics) & set(without_rerank.group_metrics))
    group_deltas = {
        group: {
            name: getattr(with_rerank.group_metrics[group], name)
            - getattr(without_rerank.group_metrics[group], name)
            for name in METRIC_FIELDS
        }
        for group in shared
    }
    after = with_rerank.aggregate.metrics
    before = without_rerank.aggregate.metrics
    aggregate_delta = {name: getattr(after, name) - getattr(before, name) for name in METRIC_FIELDS}
    relative = {
        name: (100.0 * aggregate_delta[name] / getattr(before, name)) if getattr(before, name) else None
        for name in METRIC_FIELDS
    }
    improvements = [delta["avg_score"] for delta in group_deltas.values()] or [aggregate_delta["avg_score"]]
    return ConfigComparison(
        group_deltas=group_deltas,
        aggregate_delta=aggregate_delta,
        relative_change_pct=relative,
        avg_improvement_range=(min(improvements), max(improvements))
    )

def run_ablation(
    engine: Engine,
    grouped: Sequence[QueryRecord],
    judge: Optional[Judge] = None,
    max_workers: Optional[int] = None
) -> AblationReport:
    """
    Evaluate the same grouped queries with and without reranking.
    """

    results = {
        CONFIG_WITH_RERANK: run_evaluation(engine, grouped, True, judge, max_workers),
        CONFIG_WITHOUT_RERANK: run_evaluation(engine, grouped, False, judge, max_workers)
    }
    return AblationReport(
        results=results,
        comparison=compare_configs(results[CONFIG_WITH_RERANK], results[CONFIG_WITHOUT_RERANK])
    )
