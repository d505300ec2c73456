"""
Module containing the SysGenerate class, which builds the generation request and answers from context.
"""

from typing import (
    List,
    Sequence
)
from finrag.corpus import Chunk
from finrag.gateway import (
    GenerationRequest,
    generate_answer,
    source_label
)
from finrag.pipeline.mixins.utils import run_stage

class SysGenerate:
    def build_request(
        self,
        question: str,
        context: Sequence[Chunk]
    ) -> GenerationRequest:
        return GenerationRequest(
            question=question,
            context_chunks=tuple(chunk.text for chunk in context),
            context_sources=tuple(source_label(chunk.doc_id, chunk.seq_index) for chunk in context),
            system_prompt=self.cfg.prompts.system_prompt,
            temperature=self.cfg.generator.temperature
        )

    def generate(
        self,
        question: str,
        context: List[Chunk]
    ) -> str:
        return run_stage(
            "generate",
            generate_answer,
            self.gateways.generator,
            self.build_request(question, context)
        )
