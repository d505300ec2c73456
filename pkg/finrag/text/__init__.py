"""
Text helpers shared by the keyword index, the local scorers and the stubs.
"""

from finrag.text.tokenizer import (
    STOPWORDS,
    content_tokens,
    tokenize
)
from finrag.text.markup import strip_html

__all__ = [
    "STOPWORDS",
    "content_tokens",
    "strip_html",
    "tokenize"
]
