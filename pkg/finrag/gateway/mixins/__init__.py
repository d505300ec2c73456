from finrag.gateway.mixins.roles import (
    Generator,
    Judge,
    Rewriter
)

__all__ = [
    "Generator",
    "Judge",
    "Rewriter"
]
