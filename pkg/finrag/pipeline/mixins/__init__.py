from finrag.pipeline.mixins.sysgenerate import SysGenerate
from finrag.pipeline.mixins.sysretrieve import SysRetrieve
from finrag.pipeline.mixins.sysselect import SysSelect
from finrag.pipeline.mixins.utils import (
    STAGES,
    run_stage
)

__all__ = [
    "STAGES",
    "SysGenerate",
    "SysRetrieve",
    "SysSelect",
    "run_stage"
]
