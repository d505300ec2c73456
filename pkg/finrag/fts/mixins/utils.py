"""
Module containing the BM25 scoring functions used by the keyword index.
"""

import math
from typing import (
    List,
    Sequence
)
from finrag.text import tokenize

def bm25_idf(
    total_docs: int,
    doc_freq: int
) -> float:
    """
    Inverse document frequency, ln(1 + (N - df + 0.5) / (df + 0.5)).

    Always positive, so a matching chunk never scores zero.
    """

    return math.log(1.0 + (total_docs - doc_freq + 0.5) / (doc_freq + 0.5))

def bm25_term_score(
    term_freq: int,
    doc_length: int,
    avg_doc_length: float,
    idf: float,
    k1: float,
    b: float
) -> float:
    """
    BM25 contribution of one query term to one chunk.

    Args:
        term_freq: Occurrences of the term in the chunk
        doc_length: Token count of the chunk
        avg_doc_length: Mean token count over the index
        idf: Precomputed inverse document frequency of the term
        k1: Term frequency saturation
        b: Length normalization strength

    Returns:
        The weighted score, 0.0 when the term does not occur
    """

    if term_freq <= 0:
        return 0.0
    norm = 1.0 - b + b * (doc_length / avg_doc_length) if avg_doc_length > 0 else 1.0
    return idf * (term_freq * (k1 + 1.0)) / (term_freq + k1 * norm)

def query_terms(
    keywords: Sequence[str]
) -> List[str]:
    """
    Tokenize keywords into distinct query terms, first occurrence order.

    A multi-word keyword such as "net income" contributes each of its tokens.
    """

    terms: List[str] = []
    for keyword in keywords:
        terms.extend(tokenize(keyword))
    return list(dict.fromkeys(terms))
