from typing import Tuple
from pydantic import BaseModel, ConfigDict, StrictFloat, StrictStr

from .profile_kind import ProfileKind


class SupplementaryPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: StrictStr
    kind: ProfileKind
    coordinates: Tuple[StrictFloat, ...]
