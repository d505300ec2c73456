"""
Naive HTML to text conversion for filings delivered as HTML.
"""

import html
import re

_SCRIPT_PATTERN = re.compile(r"<(script|style)\b[^>]*>.*?</\1\s*>", re.IGNORECASE | re.DOTALL)
_COMMENT_PATTERN = re.compile(r"<!--.*?-->", re.DOTALL)
_TAG_PATTERN = re.compile(r"<[^>]+>")
_WHITESPACE_PATTERN = re.compile(r"\s+")

def strip_html(
    markup: str
) -> str:
    """
    Strip tags, decode entities and collapse whitespace.

    Args:
        markup: Raw HTML

    Returns:
        Plain text with single spaces between words
    """

    text = _SCRIPT_PATTERN.sub(" ", markup)
    text = _COMMENT_PATTERN.sub(" ", text)
    text = _TAG_PATTERN.sub(" ", text)
    text = html.unescape(text)
    return _WHITESPACE_PATTERN.sub(" ", text).strip()
