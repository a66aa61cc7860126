from typing import Any, Optional
from pydantic import (
    BaseModel,
    ConfigDict,
    StrictFloat,
    StrictBool,
    StrictInt,
    StrictStr,
)

from .run_status import RunStatus


class StageRun(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    stage: StrictStr
    status: RunStatus
    error: Optional[StrictStr] = None
    trace: Optional[StrictStr] = None
    start: StrictInt | StrictFloat = 0
    end: Optional[StrictInt | StrictFloat] = None
    elapsed: StrictInt | StrictFloat = 0
    timed_out: StrictBool = False
    result: Optional[Any] = None

    def complete(self):
        return self.status in [RunStatus.COMPLETE, RunStatus.FAILED]

    @property
    def failed(self):
        return self.status == RunStatus.FAILED
