import numpy as np
from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt, model_validator
from typing import List, Tuple

from .point_id import PointId


class UnitCloud(BaseModel):
    """A factor-pair point cloud rescaled onto the unit square.

    Coordinates lie in [0, 1]; the per-axis maximum maps to exactly 1.0
    and is clamped into the top bin when a cell is assigned.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    point_ids: List[PointId]
    coords: np.ndarray
    axis_pair: Tuple[StrictInt, StrictInt] = (0, 1)
    rescale_params: Tuple[
        Tuple[StrictFloat, StrictFloat],
        Tuple[StrictFloat, StrictFloat],
    ] = ((0.0, 1.0), (0.0, 1.0))

    @model_validator(mode='after')
    def check_coords(self):
        if self.coords.ndim != 2 or self.coords.shape != (len(self.point_ids), 2):
            raise ValueError(
                f'coords shape {self.coords.shape} does not match {len(self.point_ids)} points'
            )

        if np.any(self.coords < 0.0) or np.any(self.coords > 1.0):
            raise ValueError('unit cloud coordinates must lie in [0, 1]')

        return self

    @property
    def n(self) -> int:
        return len(self.point_ids)

    @classmethod
    def from_points(
        cls,
        points: List[Tuple[float, float]],
        point_ids: List[PointId] | None = None,
    ) -> "UnitCloud":
        coords = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        if point_ids is None:
            point_ids = list(range(coords.shape[0]))

        coords.setflags(write=False)
        return cls(point_ids=point_ids, coords=coords)
