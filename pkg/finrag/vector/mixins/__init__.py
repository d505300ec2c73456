from finrag.vector.mixins.sysadd import SysAdd
from finrag.vector.mixins.sysquery import SysQuery
from finrag.vector.mixins.sysstore import SysStore
from finrag.vector.mixins.utils import (
    as_vector,
    squared_l2_distances
)

__all__ = [
    "SysAdd",
    "SysQuery",
    "SysStore",
    "as_vector",
    "squared_l2_distances"
]
