"""
Module containing the SysAdd class, which is used to add vectors to the index.
"""

from typing import (
    List,
    Sequence,
    Tuple
)
import numpy as np
from finrag.errors import DuplicateIdError
from finrag.vector.mixins.utils import as_vector

class SysAdd:
    def add_vectors(
        self,
        pairs: Sequence[Tuple[str, Sequence[float]]]
    ):
        """
        Append (chunk_ref, vector) pairs to the index.

        The batch is checked in full before anything is appended, so a failed
        call leaves the index unchanged.

        Args:
            pairs: Refs with their vectors

        Returns:
            The index itself

        Raises:
            DuplicateIdError: If a ref is already stored or repeats in pairs
            DimensionMismatchError: If a vector does not have the index dimension
        """

        refs: List[str] = []
        rows: List[np.ndarray] = []
        pending = set()
        for ref, values in pairs:
            if ref in self._positions or ref in pending:
                raise DuplicateIdError(f"vector for chunk '{ref}' already exists")
            rows.append(as_vector(values, self.dim))
            refs.append(ref)
            pending.add(ref)

        if not refs:
            return self

        block = np.vstack(rows).astype(np.float32)
        self._matrix = np.vstack([self._matrix, block]) if len(self.refs) else block
        for ref in refs:
            self._positions[ref] = len(self.refs)
            self.refs.append(ref)
        self._ref_rank = None
        return self
