"""
Adaptive prefix selection over reranked hits.

Two rules run on every result and the shorter prefix wins:

* mass rule: stop at the first prefix whose cumulative normalized mass
  reaches cumulative_keep_mass;
* cliff rule: keep only hits within cliff_drop of the top raw score.

At least one hit is always kept.
"""

from typing import (
    List,
    Optional,
    Sequence,
    Tuple
)
from finrag.config import RerankConfig
from finrag.errors import ValidationError
from finrag.hits import RerankedHit

# absorbs float rounding in cumulative sums and score differences
TOLERANCE = 1e-12

def mass_cutoff(
    hits: Sequence[RerankedHit],
    keep_mass: float
) -> int:
    """
    Length of the shortest prefix with cumulative mass >= keep_mass.

    Returns 1 when the masses are all zero and len(hits) when the
    target is never reached.
    """

    if all(hit.normalized_mass == 0 for hit in hits):
        return 1
    cumulative = 0.0
    for position, hit in enumerate(hits, start=1):
        cumulative += hit.normalized_mass
        if cumulative >= keep_mass - TOLERANCE:
            return position
    return len(hits)

def cliff_cutoff(
    hits: Sequence[RerankedHit],
    cliff_drop: float
) -> int:
    """
    Length of the longest prefix whose raw scores stay within cliff_drop of the top score.
    """

    floor = hits[0].raw_score - cliff_drop - TOLERANCE
    kept = 0
    for hit in hits:
        if hit.raw_score < floor:
            break
        kept += 1
    return kept

def cutoff_points(
    hits: Sequence[RerankedHit],
    cfg: Optional[RerankConfig] = None
) -> Tuple[int, int]:
    """
    Prefix lengths chosen by the mass rule and the cliff rule.

    Raises:
        ValidationError: If hits is empty
    """

    cfg = cfg or RerankConfig()
    if not hits:
        raise ValidationError("cannot apply cutoffs to an empty hit list")
    return mass_cutoff(hits, cfg.cumulative_keep_mass), cliff_cutoff(hits, cfg.cliff_drop)

def apply_cutoffs(
    hits: Sequence[RerankedHit],
    cfg: Optional[RerankConfig] = None
) -> List[RerankedHit]:
    """
    Select the prefix of reranked hits passed to generation.

    Args:
        hits: Hits sorted by descending raw score
        cfg: Keep mass and cliff drop

    Returns:
        The shorter of the two rule prefixes, never empty

    Raises:
        ValidationError: If hits is empty
    """

    by_mass, by_cliff = cutoff_points(hits, cfg)
    return list(hits[:max(1, min(by_mass, by_cliff))])
