"""
Module containing the Engine class, which answers questions over an indexed corpus.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import (
    List,
    Optional,
    Sequence,
    Tuple,
    Union
)
from finrag.config import PipelineConfig
from finrag.corpus import Corpus
from finrag.embeddings import (
    EmbeddingsFn,
    embedder_from_spec
)
from finrag.errors import ValidationError
from finrag.fts import FtsIndex
from finrag.gateway import (
    GatewaySet,
    build_gateways
)
from finrag.pipeline.artifacts import (
    build_indexes,
    load_indexes
)
from finrag.pipeline.mixins import (
    SysGenerate,
    SysRetrieve,
    SysSelect
)
from finrag.pipeline.trace import QueryTrace
from finrag.rerank import (
    RelevanceScorer,
    scorer_from_config
)
from finrag.vector import VectorIndex

logger = logging.getLogger(__name__)

class Engine(
    SysRetrieve,
    SysSelect,
    SysGenerate
):
    """
    Corpus, indexes, embedder, reranker and language-model roles for one config.

    Nothing is mutated after construction, so answer_query may run from
    several threads at once.
    """

    def __init__(
        self,
        corpus: Corpus,
        fts: FtsIndex,
        vectors: VectorIndex,
        embedder: EmbeddingsFn,
        scorer: RelevanceScorer,
        gateways: GatewaySet,
        cfg: Optional[PipelineConfig] = None
    ):
        self.corpus = corpus
        self.fts = fts
        self.vectors = vectors
        self.embedder = embedder
        self.scorer = scorer
        self.gateways = gateways
        self.cfg = cfg or PipelineConfig()

    @classmethod
    def build(
        cls,
        corpus: Corpus,
        cfg: Optional[PipelineConfig] = None,
        stub: bool = False,
        embedder: Optional[EmbeddingsFn] = None,
        scorer: Optional[RelevanceScorer] = None,
        gateways: Optional[GatewaySet] = None
    ) -> "Engine":
        """
        Index a corpus in memory and wire every component.

        Args:
            corpus: Chunked corpus
            cfg: Pipeline config
            stub: Use the offline embedder, overlap scorer and stub gateways
                for every component not passed explicitly
            embedder: Embedding provider override
            scorer: Relevance scorer override
            gateways: Language-model roles override

        Returns:
            Engine
        """

        cfg = cfg or PipelineConfig()
        gateways = gateways or build_gateways(cfg, stub=stub)
        embedder = embedder or embedder_from_spec(cfg.embedder, limiter=gateways.limiter, stub=stub)
        scorer = scorer or scorer_from_config(cfg.rerank, limiter=gateways.limiter, stub=stub)
        fts, vectors = build_indexes(corpus, cfg, embedder=embedder)
        return cls(corpus, fts, vectors, embedder, scorer, gateways, cfg)

    @classmethod
    def from_artifacts(
        cls,
        store_dir: Union[str, Path],
        index_dir: Union[str, Path],
        cfg: Optional[PipelineConfig] = None,
        stub: bool = False
    ) -> "Engine":
        """
        Load a chunk store and its indexes from disk.

        Raises:
            CorpusIOError: If an artifact is missing
            IntegrityError: If the artifacts do not belong together
        """

        cfg = cfg or PipelineConfig()
        corpus = Corpus.load(store_dir)
        fts, vectors = load_indexes(index_dir, corpus, cfg)
        gateways = build_gateways(cfg, stub=stub)
        embedder = embedder_from_spec(cfg.embedder, limiter=gateways.limiter, stub=stub)
        scorer = scorer_from_config(cfg.rerank, limiter=gateways.limiter, stub=stub)
        return cls(corpus, fts, vectors, embedder, scorer, gateways, cfg)

    def answer_query(
        self,
        query: str,
        enable_rerank: bool = True
    ) -> Tuple[str, QueryTrace]:
        """
        Answer one question.

        Stages: rewrite, keyword search, vector search, fusion, then either
        rerank with adaptive cutoffs or the top fused chunks, then generation.
        An empty retrieval result goes to generation with empty context.

        Args:
            query: User question
            enable_rerank: Run the reranking stage

        Returns:
            (answer, trace)

        Raises:
            ValidationError: If the query is empty
            StageError: If a stage fails; the original error is its cause
        """

        if not isinstance(query, str) or not query.strip():
            raise ValidationError("query must not be empty")

        trace = QueryTrace(query=query, enable_rerank=enable_rerank)
        rewrite, fts_hits, semantic_hits, fused = self.retrieve(query)
        trace.rewrite = rewrite
        trace.fts_hits = fts_hits
        trace.semantic_hits = semantic_hits
        trace.fused = fused

        context = self.select_context(rewrite.clarified_query, fused, enable_rerank, trace)
        trace.context_refs = [chunk.chunk_id for chunk in context]
        trace.answer = self.generate(query, context)
        logger.info(
            "answered query with %d context chunks (rerank=%s)",
            len(context),
            enable_rerank
        )
        return trace.answer, trace

    def answer_many(
        self,
        queries: Sequence[str],
        enable_rerank: bool = True,
        max_workers: Optional[int] = None
    ) -> List[Tuple[str, QueryTrace]]:
        """
        Answer several questions concurrently, results in input order.
        """

        workers = max_workers or self.cfg.max_concurrency
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda query: self.answer_query(query, enable_rerank), queries))
