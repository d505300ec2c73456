"""
Module containing build_gateways, which wires the rewriter, generator and judge for a config.
"""

import threading
from dataclasses import dataclass
from typing import Optional
import httpx
from finrag.config import PipelineConfig
from finrag.gateway.chat import ChatClient
from finrag.gateway.mixins import (
    Generator,
    Judge,
    Rewriter
)
from finrag.gateway.remote import (
    AnswerGenerator,
    AnswerJudge,
    QueryRewriter
)
from finrag.gateway.stubs import (
    StubGenerator,
    StubJudge,
    StubRewriter
)

@dataclass(frozen=True)
class GatewaySet:
    """
    The three roles plus the semaphore bounding their in-flight requests.
    """

    rewriter: Rewriter
    generator: Generator
    judge: Judge
    limiter: threading.BoundedSemaphore
    stub: bool = False

def build_gateways(
    cfg: PipelineConfig,
    stub: bool = False,
    limiter: Optional[threading.BoundedSemaphore] = None,
    transport: Optional[httpx.BaseTransport] = None
) -> GatewaySet:
    """
    Build the language-model roles described by a config.

    Args:
        cfg: Pipeline config with rewriter, generator, judge and prompt settings
        stub: Use the offline stubs instead of remote endpoints
        limiter: Shared semaphore; a new one of size max_concurrency by default
        transport: httpx transport override for the remote clients

    Returns:
        GatewaySet

    Raises:
        ConfigurationError: If remote roles are requested without an API key
    """

    limiter = limiter or threading.BoundedSemaphore(cfg.max_concurrency)
    if stub:
        return GatewaySet(
            rewriter=StubRewriter(),
            generator=StubGenerator(answer_chars=cfg.stub_answer_chars),
            judge=StubJudge(),
            limiter=limiter,
            stub=True
        )

    def client(spec):
        return ChatClient(spec, limiter=limiter, transport=transport)

    return GatewaySet(
        rewriter=QueryRewriter(client(cfg.rewriter), prompt=cfg.prompts.rewrite_prompt),
        generator=AnswerGenerator(client(cfg.generator)),
        judge=AnswerJudge(client(cfg.judge), prompt=cfg.prompts.judge_prompt),
        limiter=limiter
    )
