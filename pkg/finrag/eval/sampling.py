"""
Module containing sample_groups, which draws disjoint evaluation groups from a dataset.
"""

import random
from typing import (
    List,
    Sequence
)
from finrag.config import constants as C
from finrag.errors import (
    DuplicateIdError,
    InsufficientDataError,
    ValidationError
)
from finrag.eval.types import QueryRecord

def sample_groups(
    dataset: Sequence[QueryRecord],
    n_groups: int = C.DEFAULT_GROUP_COUNT,
    group_size: int = C.DEFAULT_GROUP_SIZE,
    seed: int = 0
) -> List[QueryRecord]:
    """
    Draw n_groups disjoint groups of group_size records, uniformly without replacement.

    Args:
        dataset: Records with unique query ids
        n_groups: Number of groups
        group_size: Records per group
        seed: Seed of the sampling RNG

    Returns:
        Sampled records with group_id 1..n_groups, group by group in draw order

    Raises:
        ValidationError: If n_groups or group_size is below 1
        InsufficientDataError: If the dataset holds fewer than n_groups * group_size records
        DuplicateIdError: If a query id repeats
    """

    if n_groups < 1 or group_size < 1:
        raise ValidationError("n_groups and group_size must be >= 1")
    needed = n_groups * group_size
    if len(dataset) < needed:
        raise InsufficientDataError(
            f"{n_groups} groups of {group_size} need {needed} records, dataset has {len(dataset)}"
        )
    if len({record.query_id for record in dataset}) != len(dataset):
        raise DuplicateIdError("dataset contains repeated query ids")

    drawn = random.Random(seed).sample(list(dataset), needed)
    return [
        record.in_group(position // group_size + 1)
        for position, record in enumerate(drawn)
    ]

def groups_of(
    records: Sequence[QueryRecord]
) -> List[int]:
    """
    Distinct group ids in ascending order.
    """

    return sorted({record.group_id for record in records})
