"""
Remote rewriter, generator and judge over a chat-completions endpoint.
"""

from finrag.config import constants as C
from finrag.gateway.chat import ChatClient
from finrag.gateway.mixins import (
    Generator,
    Judge,
    Rewriter
)
from finrag.gateway.prompts import (
    generation_messages,
    judge_messages,
    parse_rewrite,
    parse_verdict,
    rewrite_messages
)
from finrag.gateway.types import (
    GenerationRequest,
    JudgeVerdict,
    RewriteResult
)

class QueryRewriter(Rewriter):
    def __init__(
        self,
        client: ChatClient,
        prompt: str = C.DEFAULT_REWRITE_PROMPT
    ):
        self.client = client
        self.prompt = prompt

    def _rewrite(
        self,
        raw_query: str
    ) -> RewriteResult:
        return self.client.complete_parsed(
            rewrite_messages(self.prompt, raw_query),
            lambda content: parse_rewrite(content, raw_query),
            json_mode=True
        )

class AnswerGenerator(Generator):
    def __init__(
        self,
        client: ChatClient
    ):
        self.client = client

    def _generate(
        self,
        req: GenerationRequest
    ) -> str:
        return self.client.complete(generation_messages(req), temperature=req.temperature)

class AnswerJudge(Judge):
    """
    Strict judge: the reply must hold a single "score: N" line with N in 1..10,
    otherwise the judge is asked again within the retry budget.
    """

    def __init__(
        self,
        client: ChatClient,
        prompt: str = C.DEFAULT_JUDGE_PROMPT
    ):
        self.client = client
        self.prompt = prompt

    def _judge(
        self,
        question: str,
        candidate: str,
        ground_truth: str
    ) -> JudgeVerdict:
        return self.client.complete_parsed(
            judge_messages(self.prompt, question, candidate, ground_truth),
            parse_verdict
        )
