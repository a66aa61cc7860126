from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt, model_validator
from typing import Tuple


class AxisBinning(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: StrictInt
    boundaries: Tuple[StrictFloat, ...]
    marginal: Tuple[StrictInt, ...]

    @model_validator(mode='after')
    def check_bins(self):
        if len(self.boundaries) != self.base + 1 or len(self.marginal) != self.base:
            raise ValueError(
                f'base {self.base} needs {self.base + 1} boundaries and {self.base} marginal bins'
            )

        if self.boundaries[0] != 0.0 or self.boundaries[-1] != 1.0:
            raise ValueError('boundaries must start at 0 and end at 1')

        if any(lo >= hi for lo, hi in zip(self.boundaries, self.boundaries[1:])):
            raise ValueError('boundaries must be strictly increasing')

        if any(count < 0 for count in self.marginal):
            raise ValueError('marginal counts must be non-negative')

        return self

    @property
    def total(self) -> int:
        return sum(self.marginal)
