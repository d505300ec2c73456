"""
Module containing the Utils class, which makes embedders callable and adds batched embedding.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import (
    List,
    Sequence
)
from finrag.errors import ValidationError

class Utils:
    def __call__(
        self,
        texts: List[str]
    ) -> List[List[float]]:
        """
        Make the class callable for compatibility with other libraries.
        """

        return self.embed(texts)

    def embed_in_batches(
        self,
        texts: Sequence[str],
        batch_size: int,
        max_workers: int = 1
    ) -> List[List[float]]:
        """
        Embed texts batch by batch, optionally with several batches in flight.

        Args:
            texts: Texts to embed
            batch_size: Texts per provider call
            max_workers: Batches processed concurrently

        Returns:
            One vector per text, in input order
        """

        if batch_size < 1 or max_workers < 1:
            raise ValidationError("batch_size and max_workers must be >= 1")

        texts = list(texts)
        batches = [texts[start:start + batch_size] for start in range(0, len(texts), batch_size)]
        if max_workers == 1 or len(batches) <= 1:
            results = [self.embed(batch) for batch in batches]
        else:
            with ThreadPoolExecutor(max_workers=max_workers) as pool:
                results = list(pool.map(self.embed, batches))
        return [vector for batch in results for vector in batch]
