"""
Module containing the tokenizer used by every lexical component.

Tokens are maximal runs of Unicode letters and digits, lowercased. There is
no stemming, and stopwords are only removed where a caller asks for it.
"""

import re
from typing import (
    FrozenSet,
    List
)

# letters and digits of any script; underscores split tokens
TOKEN_PATTERN = re.compile(r"[^\W_]+", re.UNICODE)

STOPWORDS: FrozenSet[str] = frozenset({
    "a", "about", "after", "all", "also", "am", "an", "and", "any", "are",
    "as", "at", "be", "been", "before", "being", "between", "both", "but",
    "by", "can", "could", "did", "do", "does", "doing", "during", "each",
    "for", "from", "had", "has", "have", "having", "how", "i", "if", "in",
    "into", "is", "it", "its", "me", "more", "most", "my", "no", "not", "of",
    "on", "or", "other", "our", "over", "per", "should", "so", "some", "such",
    "than", "that", "the", "their", "them", "then", "there", "these", "they",
    "this", "those", "through", "to", "under", "up", "was", "we", "were",
    "what", "when", "where", "which", "while", "who", "whom", "why", "will",
    "with", "would", "you", "your"
})

def tokenize(
    text: str
) -> List[str]:
    """
    Split text into lowercase alphanumeric tokens.

    Args:
        text: Text to tokenize

    Returns:
        List of tokens in order of appearance, duplicates kept
    """

    return [token.lower() for token in TOKEN_PATTERN.findall(text)]

def content_tokens(
    text: str
) -> List[str]:
    """
    Tokenize text and drop stopwords, falling back to every token when
    nothing else remains.
    """

    tokens = tokenize(text)
    kept = [token for token in tokens if token not in STOPWORDS]
    return kept or tokens
