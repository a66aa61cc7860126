import numpy as np
from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt, model_validator
from typing import Tuple

from .point_id import PointId


Members = Tuple[Tuple[Tuple[PointId, ...], ...], ...]


class GridHistogram(BaseModel):
    """Frequency-of-occurrence counts of a cloud over a g x g grid.

    Cells are indexed (i, j) with i the x bin and j the y bin.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    base: StrictInt
    boundaries_x: Tuple[StrictFloat, ...]
    boundaries_y: Tuple[StrictFloat, ...]
    counts: np.ndarray
    members: Members

    @model_validator(mode='after')
    def check_grid(self):
        for boundaries in (self.boundaries_x, self.boundaries_y):
            if len(boundaries) != self.base + 1:
                raise ValueError(f'expected {self.base + 1} boundaries, got {len(boundaries)}')

        if self.counts.shape != (self.base, self.base):
            raise ValueError(f'counts shape {self.counts.shape} does not match base {self.base}')

        return self

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def max_count(self) -> int:
        return int(self.counts.max())

    def cell_members(self, i: int, j: int) -> Tuple[PointId, ...]:
        return self.members[i][j]
