"""
Prompt assembly and strict parsing of model replies.
"""

import json
import re
from typing import (
    Dict,
    List,
    Sequence
)
from finrag.errors import IntegrityError
from finrag.gateway.types import (
    GenerationRequest,
    JudgeVerdict,
    RewriteResult
)
from finrag.text import content_tokens

CONTEXT_SEPARATOR = "\n\n---\n\n"
Message = Dict[str, str]

_SCORE_LINE = re.compile(r"^\s*score\s*:\s*(-?\d+)\s*$", re.IGNORECASE | re.MULTILINE)
_RATIONALE_LINE = re.compile(r"^\s*rationale\s*:\s*(.*)$", re.IGNORECASE | re.MULTILINE)
_JSON_OBJECT = re.compile(r"\{.*\}", re.DOTALL)

def source_label(
    doc_id: str,
    seq_index: int
) -> str:
    return f"[{doc_id} #{seq_index}]"

def assemble_context(
    chunks: Sequence[str],
    sources: Sequence[str] = ()
) -> str:
    """
    Join chunk texts in order, each under its source label when one is given.
    """

    if sources:
        blocks = [f"{label}\n{text}" for label, text in zip(sources, chunks)]
    else:
        blocks = list(chunks)
    return CONTEXT_SEPARATOR.join(blocks)

def generation_messages(
    req: GenerationRequest
) -> List[Message]:
    context = assemble_context(req.context_chunks, req.context_sources)
    if not context:
        context = "(no context was retrieved)"
    return [
        {"role": "system", "content": req.system_prompt},
        {"role": "user", "content": f"Context:\n{context}\n\nQuestion: {req.question}"}
    ]

def rewrite_messages(
    prompt: str,
    raw_query: str
) -> List[Message]:
    return [
        {"role": "system", "content": prompt},
        {"role": "user", "content": raw_query}
    ]

def judge_messages(
    prompt: str,
    question: str,
    candidate: str,
    ground_truth: str
) -> List[Message]:
    return [
        {"role": "system", "content": prompt},
        {
            "role": "user",
            "content": (
                f"Question:\n{question}\n\n"
                f"Ground truth:\n{ground_truth}\n\n"
                f"Candidate answer:\n{candidate}"
            )
        }
    ]

def parse_rewrite(
    content: str,
    raw_query: str
) -> RewriteResult:
    """
    Read {"clarified_query", "keywords"} from a rewriter reply.

    Keywords are lowercased, stripped and deduplicated; when none survive,
    the content tokens of the clarified query are used instead.

    Raises:
        IntegrityError: If the reply holds no JSON object of that shape
    """

    match = _JSON_OBJECT.search(content or "")
    if match is None:
        raise IntegrityError("rewriter reply contains no JSON object")
    try:
        payload = json.loads(match.group(0))
    except json.JSONDecodeError as exc:
        raise IntegrityError(f"rewriter reply is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise IntegrityError("rewriter reply must be a JSON object")

    clarified = payload.get("clarified_query")
    if not isinstance(clarified, str) or not clarified.strip():
        clarified = raw_query
    raw_keywords = payload.get("keywords") or []
    if isinstance(raw_keywords, str):
        raw_keywords = [raw_keywords]
    if not isinstance(raw_keywords, list):
        raise IntegrityError("rewriter keywords must be a list")

    keywords: List[str] = []
    for keyword in raw_keywords:
        cleaned = str(keyword).strip().lower()
        if cleaned and cleaned not in keywords:
            keywords.append(cleaned)
    if not keywords:
        keywords = list(dict.fromkeys(content_tokens(clarified)))
    return RewriteResult(clarified_query=clarified.strip(), keywords=tuple(keywords))

def parse_verdict(
    content: str
) -> JudgeVerdict:
    """
    Read the "score: <int>" and optional "rationale: ..." lines of a judge reply.

    Raises:
        IntegrityError: If there is no score line or the score is outside 1..10
    """

    scores = _SCORE_LINE.findall(content or "")
    if len(scores) != 1:
        raise IntegrityError(f"judge reply must contain exactly one score line, found {len(scores)}")
    rationale = _RATIONALE_LINE.search(content)
    return JudgeVerdict(
        score=int(scores[0]),
        rationale=rationale.group(1).strip() if rationale else ""
    )
