"""
Module containing the metric reductions over judge scores.
"""

import math
import statistics
from decimal import (
    ROUND_HALF_UP,
    Decimal
)
from typing import (
    Any,
    Dict,
    Sequence
)
from finrag.errors import (
    InsufficientDataError,
    ValidationError
)
from finrag.eval.types import (
    AggregateMetrics,
    GroupMetrics,
    ScoreRecord
)

def round_half_up(
    value: float,
    places: int = 1
) -> float:
    """
    Round half away from zero, e.g. 24.25 -> 24.3 and -0.05 -> -0.1.
    """

    quantum = Decimal(1).scaleb(-places)
    # repr keeps the shortest decimal form of the float
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))

def compute_group_metrics(
    scores: Sequence[ScoreRecord]
) -> GroupMetrics:
    """
    Metrics of one group under one configuration.

    Args:
        scores: Judge scores, all from the same group and config

    Returns:
        Full-precision GroupMetrics

    Raises:
        InsufficientDataError: If scores is empty
        ValidationError: If the records mix groups or configs
    """

    if not scores:
        raise InsufficientDataError("cannot compute metrics of an empty group")
    if len({(record.group_id, record.config) for record in scores}) != 1:
        raise ValidationError("group metrics need scores from a single group and config")

    n = len(scores)
    values = [record.score for record in scores]
    return GroupMetrics(
        avg_score=math.fsum(values) / n,
        pct_score_1=100.0 * sum(1 for value in values if value == 1) / n,
        pct_score_ge8=100.0 * sum(1 for value in values if value >= 8) / n,
        pct_score_10=100.0 * sum(1 for value in values if value == 10) / n,
        n=n
    )

def aggregate_metrics(
    groups: Sequence[GroupMetrics]
) -> AggregateMetrics:
    """
    Average group metrics without weighting and measure the spread of group averages.

    Args:
        groups: Metrics of each group

    Returns:
        AggregateMetrics; std_dev is the population standard deviation of the
        group averages, sample_std_dev the n-1 form (0 for a single group)

    Raises:
        InsufficientDataError: If groups is empty
    """

    if not groups:
        raise InsufficientDataError("cannot aggregate zero groups")

    def mean(field: str) -> float:
        return math.fsum(getattr(group, field) for group in groups) / len(groups)

    averages = [group.avg_score for group in groups]
    return AggregateMetrics(
        metrics=GroupMetrics(
            avg_score=mean("avg_score"),
            pct_score_1=mean("pct_score_1"),
            pct_score_ge8=mean("pct_score_ge8"),
            pct_score_10=mean("pct_score_10"),
            n=sum(group.n for group in groups)
        ),
        std_dev=statistics.pstdev(averages),
        sample_std_dev=statistics.stdev(averages) if len(averages) > 1 else 0.0,
        groups=len(groups)
    )

def rounded_metrics(
    metrics: GroupMetrics,
    places: int = 1
) -> Dict[str, Any]:
    """
    Presentation form: average to two decimals, percentages to places decimals.
    """

    return {
        "avg_score": round_half_up(metrics.avg_score, 2),
        "pct_score_1": round_half_up(metrics.pct_score_1, places),
        "pct_score_ge8": round_half_up(metrics.pct_score_ge8, places),
        "pct_score_10": round_half_up(metrics.pct_score_10, places),
        "n": metrics.n
    }
