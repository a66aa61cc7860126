from typing import Callable, Dict, Literal, Union

from pydantic import BaseModel, StrictStr

PrimaryType = Union[str, int, float, bytes, bool]


class Env(BaseModel):
    GRIDEX_LOG_LEVEL: Literal["debug", "info", "warning", "error"] = "info"
    GRIDEX_STAGE_TIMEOUT: StrictStr = "10m"

    @classmethod
    def types_map(self) -> Dict[str, Callable[[str], PrimaryType]]:
        return {
            "GRIDEX_LOG_LEVEL": str,
            "GRIDEX_STAGE_TIMEOUT": str,
        }
