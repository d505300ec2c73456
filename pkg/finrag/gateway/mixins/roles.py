"""
Module containing the base classes of the three language-model roles.

Each public method checks its inputs and the provider's output, so remote
clients and offline stubs share one contract.
"""

from finrag.errors import (
    IntegrityError,
    ValidationError
)
from finrag.gateway.types import (
    GenerationRequest,
    JudgeVerdict,
    RewriteResult
)

class Rewriter:
    def _rewrite(
        self,
        raw_query: str
    ) -> RewriteResult:
        raise NotImplementedError(f"{self.__class__.__name__} must implement `_rewrite`.")

    def rewrite(
        self,
        raw_query: str
    ) -> RewriteResult:
        """
        Turn a user question into a clarified query and search keywords.

        Raises:
            ValidationError: If the query is empty after trimming
        """

        if not isinstance(raw_query, str) or not raw_query.strip():
            raise ValidationError("query must not be empty")
        return self._rewrite(raw_query)

class Generator:
    def _generate(
        self,
        req: GenerationRequest
    ) -> str:
        raise NotImplementedError(f"{self.__class__.__name__} must implement `_generate`.")

    def generate(
        self,
        req: GenerationRequest
    ) -> str:
        """
        Answer a question from the request context.

        Raises:
            IntegrityError: If the provider returns an empty answer
        """

        answer = self._generate(req)
        if not isinstance(answer, str) or not answer.strip():
            raise IntegrityError(f"{self.__class__.__name__} returned an empty answer")
        return answer

class Judge:
    def _judge(
        self,
        question: str,
        candidate: str,
        ground_truth: str
    ) -> JudgeVerdict:
        raise NotImplementedError(f"{self.__class__.__name__} must implement `_judge`.")

    def judge(
        self,
        question: str,
        candidate: str,
        ground_truth: str
    ) -> JudgeVerdict:
        """
        Grade a candidate answer against the ground truth on a 1-10 scale.

        Raises:
            ValidationError: If any input is empty
        """

        for name, value in (
            ("question", question),
            ("candidate", candidate),
            ("ground_truth", ground_truth)
        ):
            if not isinstance(value, str) or not value.strip():
                raise ValidationError(f"{name} must not be empty")
        return self._judge(question, candidate, ground_truth)
