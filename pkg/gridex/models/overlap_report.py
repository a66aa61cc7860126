from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt
from typing import List, Tuple

from .point_id import PointId


class DuplicateGroup(BaseModel):
    model_config = ConfigDict(frozen=True)

    coordinates: Tuple[StrictFloat, StrictFloat]
    point_ids: Tuple[PointId, ...]

    @property
    def size(self) -> int:
        return len(self.point_ids)


class OverlapReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_cell: Tuple[StrictInt, StrictInt]
    max_count: StrictInt
    duplicate_groups: List[DuplicateGroup]

    @property
    def redundant_points(self) -> int:
        return sum(group.size - 1 for group in self.duplicate_groups)
