"""
Records and metrics produced by an evaluation run.
"""

from dataclasses import (
    asdict,
    dataclass,
    replace
)
from typing import (
    Any,
    Dict,
    Optional
)
from finrag.errors import (
    IntegrityError,
    ValidationError
)

CONFIG_WITH_RERANK = "with_rerank"
CONFIG_WITHOUT_RERANK = "without_rerank"
CONFIG_LABELS = {
    CONFIG_WITH_RERANK: "With",
    CONFIG_WITHOUT_RERANK: "Without"
}

def config_label(
    enable_rerank: bool
) -> str:
    return CONFIG_WITH_RERANK if enable_rerank else CONFIG_WITHOUT_RERANK

@dataclass(frozen=True)
class QueryRecord:
    """
    One benchmark question. group_id is 0 until the record is sampled into a group.
    """

    query_id: str
    query: str
    ground_truth: str
    group_id: int = 0
    category: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.query_id:
            raise ValidationError("query_id must not be empty")
        if not self.query.strip():
            raise ValidationError(f"query {self.query_id} has no text")
        if not self.ground_truth.strip():
            raise ValidationError(f"query {self.query_id} has no ground truth")
        if self.group_id < 0:
            raise ValidationError(f"query {self.query_id} has group {self.group_id}")

    def in_group(
        self,
        group_id: int
    ) -> "QueryRecord":
        return replace(self, group_id=group_id)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

@dataclass(frozen=True)
class ScoreRecord:
    query_id: str
    config: str
    group_id: int
    score: int
    answer: str
    rationale: str = ""

    def __post_init__(self) -> None:
        if not 1 <= self.score <= 10:
            raise IntegrityError(f"score {self.score} for {self.query_id} is outside 1..10")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

@dataclass(frozen=True)
class QueryFailure:
    """
    A query left out of the metrics because a stage or the judge failed.
    """

    query_id: str
    config: str
    group_id: int
    stage: str
    error: str

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

@dataclass(frozen=True)
class GroupMetrics:
    """
    Average judge score and score shares of one group, at full precision.

    Percentages are 0..100; finrag.eval.metrics.rounded_metrics rounds them for display.
    """

    avg_score: float
    pct_score_1: float
    pct_score_ge8: float
    pct_score_10: float
    n: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

@dataclass(frozen=True)
class AggregateMetrics:
    """
    Unweighted mean of group metrics plus the spread of group averages.
    """

    metrics: GroupMetrics
    std_dev: float
    sample_std_dev: float
    groups: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "metrics": self.metrics.to_dict(),
            "std_dev": self.std_dev,
            "sample_std_dev": self.sample_std_dev,
            "groups": self.groups
        }
