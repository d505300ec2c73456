"""
Module containing the distance helpers used by the flat vector index.
"""

from typing import Sequence
import numpy as np
from finrag.errors import (
    DimensionMismatchError,
    IntegrityError
)

# float32 storage puts orthogonal unit vectors a few ulps past 2.0
DISTANCE_TOLERANCE = 1e-6

def as_vector(
    values: Sequence[float],
    dim: int
) -> np.ndarray:
    """
    Convert a vector to a float64 array and check its shape.

    Args:
        values: Vector entries
        dim: Expected length

    Returns:
        One-dimensional float64 array

    Raises:
        DimensionMismatchError: If the length is not dim
        IntegrityError: If an entry is NaN or infinite
    """

    vector = np.asarray(values, dtype=np.float64)
    if vector.ndim != 1 or vector.shape[0] != dim:
        raise DimensionMismatchError(
            f"vector has dimension {vector.shape[-1] if vector.ndim else 0}, index expects {dim}"
        )
    if not np.all(np.isfinite(vector)):
        raise IntegrityError("vector contains non-finite values")
    return vector

def squared_l2_distances(
    matrix: np.ndarray,
    query: np.ndarray
) -> np.ndarray:
    """
    Squared Euclidean distance from query to every row of matrix.

    Args:
        matrix: (n, dim) stored vectors
        query: (dim,) query vector

    Returns:
        (n,) float64 distances
    """

    # difference form keeps identical vectors at exactly 0
    diff = matrix.astype(np.float64) - query
    return np.einsum("ij,ij->i", diff, diff)
