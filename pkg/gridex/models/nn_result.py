from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt

from .point_id import PointId


class NNResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: PointId
    distance: StrictFloat
    cells_examined: StrictInt
    candidates_compared: StrictInt
