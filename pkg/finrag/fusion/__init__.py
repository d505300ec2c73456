from finrag.fusion.rrf import rrf_fuse

__all__ = [
    "rrf_fuse"
]
