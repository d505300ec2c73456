"""
Language-model roles: query rewriter, answer generator and judge.
"""

from finrag.gateway.chat import ChatClient
from finrag.gateway.factory import (
    GatewaySet,
    build_gateways
)
from finrag.gateway.mixins import (
    Generator,
    Judge,
    Rewriter
)
from finrag.gateway.prompts import (
    CONTEXT_SEPARATOR,
    assemble_context,
    generation_messages,
    parse_rewrite,
    parse_verdict,
    source_label
)
from finrag.gateway.remote import (
    AnswerGenerator,
    AnswerJudge,
    QueryRewriter
)
from finrag.gateway.stubs import (
    StubGenerator,
    StubJudge,
    StubRewriter,
    f1_to_score,
    token_f1
)
from finrag.gateway.types import (
    GenerationRequest,
    JudgeVerdict,
    RewriteResult
)

def rewrite_query(
    rewriter: Rewriter,
    raw_query: str
) -> RewriteResult:
    return rewriter.rewrite(raw_query)

def generate_answer(
    generator: Generator,
    req: GenerationRequest
) -> str:
    return generator.generate(req)

def judge_answer(
    judge: Judge,
    question: str,
    candidate: str,
    ground_truth: str
) -> JudgeVerdict:
    return judge.judge(question, candidate, ground_truth)

__all__ = [
    "AnswerGenerator",
    "AnswerJudge",
    "CONTEXT_SEPARATOR",
    "ChatClient",
    "GatewaySet",
    "GenerationRequest",
    "Generator",
    "Judge",
    "JudgeVerdict",
    "QueryRewriter",
    "RewriteResult",
    "Rewriter",
    "StubGenerator",
    "StubJudge",
    "StubRewriter",
    "assemble_context",
    "build_gateways",
    "f1_to_score",
    "generate_answer",
    "generation_messages",
    "judge_answer",
    "parse_rewrite",
    "parse_verdict",
    "rewrite_query",
    "source_label",
    "token_f1"
]
