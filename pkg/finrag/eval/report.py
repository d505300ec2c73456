"""
Module containing the report rendering and the machine-readable evaluation outputs.

Output directory layout:

    scores.jsonl    one ScoreRecord per line, sorted by (config, group, query_id)
    traces.jsonl    one QueryTrace per scored query, same order
    failures.jsonl  queries excluded from the metrics
    metrics.json    per-group and aggregate metrics plus the comparison
    manifest.json   run manifest
"""

import json
from pathlib import Path
from typing import (
    Any,
    Dict,
    List,
    Mapping,
    Optional,
    Union
)
from rich.table import Table
from finrag.eval.metrics import rounded_metrics
from finrag.eval.runner import AblationReport
from finrag.eval.types import CONFIG_LABELS
from finrag.utils import (
    atomic_write_text,
    write_jsonl
)

SCORES_FILE = "scores.jsonl"
TRACES_FILE = "traces.jsonl"
FAILURES_FILE = "failures.jsonl"
METRICS_FILE = "metrics.json"
MANIFEST_FILE = "manifest.json"

def render_table(
    report: AblationReport,
    title: str = "Evaluation results"
) -> Table:
    """
    Build a rich table with one row per group and configuration plus an Avg row per configuration.
    """

    table = Table(title=title)
    for column in ("Group", "Config", "Avg Score", "=1 %", "≥8 %", "=10 %", "n"):
        table.add_column(column, justify="left" if column in ("Group", "Config") else "right")

    def add_row(group: str, config: str, metrics, style: Optional[str] = None) -> None:
        shown = rounded_metrics(metrics)
        table.add_row(
            group,
            CONFIG_LABELS.get(config, config),
            f"{shown['avg_score']:.2f}",
            f"{shown['pct_score_1']:.1f}",
            f"{shown['pct_score_ge8']:.1f}",
            f"{shown['pct_score_10']:.1f}",
            str(shown["n"]),
            style=style
        )

    groups = sorted({group for result in report.results.values() for group in result.group_metrics})
    for group in groups:
        for config, result in report.results.items():
            if group in result.group_metrics:
                add_row(f"Group {group:02d}", config, result.group_metrics[group])
    for config, result in report.results.items():
        if result.aggregate is not None:
            add_row("Avg", config, result.aggregate.metrics, style="bold")
    return table

def summary_lines(
    report: AblationReport
) -> List[str]:
    """
    Plain-text notes printed under the table: dispersion, exclusions and the rerank delta.
    """

    lines = []
    for config, result in report.results.items():
        label = CONFIG_LABELS.get(config, config)
        if result.aggregate is not None:
            lines.append(
                f"{label}: std dev of group averages {result.aggregate.std_dev:.2f} "
                f"(sample {result.aggregate.sample_std_dev:.2f})"
            )
        if result.excluded:
            lines.append(f"{label}: {result.excluded} queries excluded after failures")
    if report.comparison is not None:
        delta = report.comparison.aggregate_delta
        low, high = report.comparison.avg_improvement_range
        lines.append(
            f"Reranking changes avg score by {delta['avg_score']:+.2f} "
            f"(per group {low:+.2f} to {high:+.2f}) and score>=8 share by "
            f"{delta['pct_score_ge8']:+.1f} points"
        )
    return lines

def write_report(
    report: AblationReport,
    directory: Union[str, Path],
    manifest: Optional[Mapping[str, Any]] = None
) -> Dict[str, Path]:
    """
    Write every machine-readable output of a run.

    Args:
        report: Evaluation or ablation report
        directory: Output directory, created if needed
        manifest: Run manifest to store next to the results

    Returns:
        Output name -> path
    """

    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)

    scores = sorted(
        (score for result in report.results.values() for score in result.scores),
        key=lambda score: (score.config, score.group_id, score.query_id)
    )
    traces = sorted(
        (trace for result in report.results.values() for trace in result.traces),
        key=lambda trace: (trace["config"], trace["group_id"], trace["query_id"])
    )
    failures = sorted(
        (failure for result in report.results.values() for failure in result.failures),
        key=lambda failure: (failure.config, failure.group_id, failure.query_id)
    )

    paths = {
        "scores": write_jsonl(target / SCORES_FILE, (score.to_dict() for score in scores)),
        "traces": write_jsonl(target / TRACES_FILE, traces),
        "failures": write_jsonl(target / FAILURES_FILE, (failure.to_dict() for failure in failures)),
        "metrics": atomic_write_text(
            target / METRICS_FILE,
            json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
        )
    }
    if manifest is not None:
        paths["manifest"] = atomic_write_text(
            target / MANIFEST_FILE,
            json.dumps(dict(manifest), indent=2, sort_keys=True) + "\n"
        )
    return paths
