"""
Request and result types exchanged with the language-model roles.
"""

from dataclasses import (
    asdict,
    dataclass,
    field
)
from typing import (
    Any,
    Dict,
    Tuple
)
from finrag.config import constants as C
from finrag.errors import (
    IntegrityError,
    ValidationError
)

@dataclass(frozen=True)
class RewriteResult:
    """
    A clarified query for semantic search plus keywords for the keyword index.
    """

    clarified_query: str
    keywords: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.clarified_query.strip():
            raise IntegrityError("rewrite produced an empty clarified query")
        if not self.keywords:
            raise IntegrityError("rewrite produced no keywords")
        for keyword in self.keywords:
            if not keyword.strip() or keyword != keyword.lower():
                raise IntegrityError(f"keyword {keyword!r} must be a non-empty lowercase string")

    def to_dict(self) -> Dict[str, Any]:
        return {"clarified_query": self.clarified_query, "keywords": list(self.keywords)}

@dataclass(frozen=True)
class GenerationRequest:
    """
    Everything the generator sees for one answer.

    context_chunks are raw chunk texts in final ranking order; context_sources
    holds the matching "[doc_id #seq]" labels shown in the prompt.
    """

    question: str
    context_chunks: Tuple[str, ...] = ()
    system_prompt: str = C.DEFAULT_SYSTEM_PROMPT
    temperature: float = C.DEFAULT_TEMPERATURE
    context_sources: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.question.strip():
            raise ValidationError("question must not be empty")
        if self.temperature < 0:
            raise ValidationError(f"temperature must be >= 0, got {self.temperature}")
        if self.context_sources and len(self.context_sources) != len(self.context_chunks):
            raise ValidationError("context_sources must label every context chunk")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

@dataclass(frozen=True)
class JudgeVerdict:
    score: int
    rationale: str = ""

    def __post_init__(self) -> None:
        if isinstance(self.score, bool) or not isinstance(self.score, int):
            raise IntegrityError(f"judge score must be an integer, got {self.score!r}")
        if not 1 <= self.score <= 10:
            raise IntegrityError(f"judge score {self.score} is outside 1..10")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
