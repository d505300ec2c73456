"""
Deterministic offline stand-ins for the three language-model roles.
"""

from collections import Counter
from finrag.config import constants as C
from finrag.gateway.mixins import (
    Generator,
    Judge,
    Rewriter
)
from finrag.gateway.types import (
    GenerationRequest,
    JudgeVerdict,
    RewriteResult
)
from finrag.text import (
    content_tokens,
    tokenize
)

def token_f1(
    candidate: str,
    reference: str
) -> float:
    """
    Multiset token F1 between two texts; 1.0 when both have no tokens.
    """

    predicted = tokenize(candidate)
    expected = tokenize(reference)
    if not predicted and not expected:
        return 1.0
    if not predicted or not expected:
        return 0.0
    common = sum((Counter(predicted) & Counter(expected)).values())
    if common == 0:
        return 0.0
    precision = common / len(predicted)
    recall = common / len(expected)
    return 2 * precision * recall / (precision + recall)

def f1_to_score(
    f1: float
) -> int:
    """
    Map token F1 onto the rubric anchors 10, 8, 5 and 1.
    """

    if f1 >= 1.0:
        return 10
    if f1 >= 0.8:
        return 8
    if f1 >= 0.4:
        return 5
    return 1

class StubRewriter(Rewriter):
    """
    Keeps the query as is; keywords are its tokens minus stopwords.
    """

    def _rewrite(
        self,
        raw_query: str
    ) -> RewriteResult:
        keywords = list(dict.fromkeys(content_tokens(raw_query)))
        if not keywords:
            # punctuation-only query
            keywords = [raw_query.strip().lower()]
        return RewriteResult(clarified_query=raw_query, keywords=tuple(keywords))

class StubGenerator(Generator):
    """
    Extracts the opening characters of the top context chunk.
    """

    def __init__(
        self,
        answer_chars: int = C.DEFAULT_STUB_ANSWER_CHARS
    ):
        self.answer_chars = answer_chars

    def _generate(
        self,
        req: GenerationRequest
    ) -> str:
        if not req.context_chunks:
            return C.INSUFFICIENT_CONTEXT_ANSWER
        answer = req.context_chunks[0][:self.answer_chars]
        return answer if answer.strip() else C.INSUFFICIENT_CONTEXT_ANSWER

class StubJudge(Judge):
    def _judge(
        self,
        question: str,
        candidate: str,
        ground_truth: str
    ) -> JudgeVerdict:
        f1 = token_f1(candidate, ground_truth)
        return JudgeVerdict(score=f1_to_score(f1), rationale=f"token F1 {f1:.4f}")
