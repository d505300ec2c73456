"""
Module containing the index artifact helpers used by build-index and Engine.from_artifacts.
"""

import logging
from pathlib import Path
from typing import (
    Dict,
    Optional,
    Tuple,
    Union
)
from finrag.config import PipelineConfig
from finrag.corpus import Corpus
from finrag.embeddings import (
    EmbeddingsFn,
    embedder_from_spec
)
from finrag.errors import (
    DimensionMismatchError,
    IntegrityError
)
from finrag.fts import (
    FtsIndex,
    build_fts
)
from finrag.utils import sha256_file
from finrag.vector import (
    VectorIndex,
    build_vector_index
)

logger = logging.getLogger(__name__)

FTS_FILE = "fts_index.json"
VECTOR_FILE = "vectors.fvx"

def build_indexes(
    corpus: Corpus,
    cfg: PipelineConfig,
    embedder: Optional[EmbeddingsFn] = None,
    stub: bool = False
) -> Tuple[FtsIndex, VectorIndex]:
    """
    Build the keyword and vector indexes of a corpus.

    Args:
        corpus: Chunked corpus
        cfg: BM25 and embedder settings
        embedder: Provider override; built from cfg.embedder by default
        stub: Use the offline hashing embedder when no override is given
    """

    embedder = embedder or embedder_from_spec(cfg.embedder, stub=stub)
    fts = build_fts(corpus, cfg.bm25)
    vectors = build_vector_index(
        corpus,
        embedder,
        cfg.embedder,
        max_workers=cfg.max_concurrency
    )
    return fts, vectors

def save_indexes(
    fts: FtsIndex,
    vectors: VectorIndex,
    directory: Union[str, Path]
) -> Dict[str, str]:
    """
    Write both indexes into a directory.

    Returns:
        File name -> SHA-256 of the written file
    """

    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    fts.save(target / FTS_FILE)
    vectors.save(target / VECTOR_FILE)
    return {name: sha256_file(target / name) for name in (FTS_FILE, VECTOR_FILE)}

def load_indexes(
    directory: Union[str, Path],
    corpus: Corpus,
    cfg: PipelineConfig
) -> Tuple[FtsIndex, VectorIndex]:
    """
    Read both indexes and check them against the corpus and config.

    Raises:
        CorpusIOError: If an index file is missing
        DimensionMismatchError: If the vector index dimension differs from cfg.embedder.dim
        IntegrityError: If an index refers to chunks outside the corpus
    """

    source = Path(directory)
    fts = FtsIndex.load(source / FTS_FILE)
    vectors = VectorIndex.load(source / VECTOR_FILE)
    if vectors.dim != cfg.embedder.dim:
        raise DimensionMismatchError(
            f"vector index has dimension {vectors.dim}, config expects {cfg.embedder.dim}"
        )
    expected = {chunk.chunk_id for chunk in corpus.chunks}
    if set(fts.doc_lengths) != expected or set(vectors.refs) != expected:
        raise IntegrityError(f"indexes in {source} were not built from this chunk store")
    logger.info("loaded indexes from %s", source)
    return fts, vectors
