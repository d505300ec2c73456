"""
Corpus operations module.
"""

from finrag.corpus.mixins.sysget import SysGet
from finrag.corpus.mixins.sysingest import (
    SysIngest,
    parse_document
)
from finrag.corpus.mixins.sysstore import SysStore

__all__ = [
    "SysGet",
    "SysIngest",
    "SysStore",
    "parse_document"
]
