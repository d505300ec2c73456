"""
Grouped evaluation and the rerank ablation.
"""

from finrag.eval.dataset import (
    load_dataset,
    parse_query_record
)
from finrag.eval.metrics import (
    aggregate_metrics,
    compute_group_metrics,
    round_half_up,
    rounded_metrics
)
from finrag.eval.report import (
    render_table,
    summary_lines,
    write_report
)
from finrag.eval.runner import (
    AblationReport,
    ConfigComparison,
    EvaluationResult,
    compare_configs,
    run_ablation,
    run_evaluation
)
from finrag.eval.sampling import (
    groups_of,
    sample_groups
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

__all__ = [
    "AblationReport",
    "AggregateMetrics",
    "CONFIG_WITHOUT_RERANK",
    "CONFIG_WITH_RERANK",
    "ConfigComparison",
    "EvaluationResult",
    "GroupMetrics",
    "QueryFailure",
    "QueryRecord",
    "ScoreRecord",
    "aggregate_metrics",
    "compare_configs",
    "compute_group_metrics",
    "config_label",
    "groups_of",
    "load_dataset",
    "parse_query_record",
    "render_table",
    "round_half_up",
    "rounded_metrics",
    "run_ablation",
    "run_evaluation",
    "sample_groups",
    "summary_lines",
    "write_report"
]
