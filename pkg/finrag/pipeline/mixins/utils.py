"""
Module containing run_stage, which attributes a failure to the pipeline stage it came from.
"""

import logging
from typing import (
    Any,
    Callable,
    TypeVar
)
from finrag.errors import StageError

logger = logging.getLogger(__name__)

T = TypeVar("T")

STAGES = ("rewrite", "fts", "semantic", "fusion", "rerank", "generate")

def run_stage(
    stage: str,
    fn: Callable[..., T],
    *args: Any,
    **kwargs: Any
) -> T:
    """
    Call fn and re-raise any failure as StageError(stage).
    """

    try:
        return fn(*args, **kwargs)
    except StageError:
        raise
    except Exception as exc:
        logger.debug("stage %s failed: %s", stage, exc)
        raise StageError(stage, exc) from exc
