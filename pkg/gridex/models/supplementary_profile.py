import numpy as np
from pydantic import BaseModel, ConfigDict, StrictStr, model_validator

from .profile_kind import ProfileKind


class SupplementaryProfile(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    id: StrictStr
    kind: ProfileKind
    values: np.ndarray

    @model_validator(mode='after')
    def check_values(self):
        if self.values.ndim != 1:
            raise ValueError('profile values must be one-dimensional')

        if np.any(self.values < 0):
            raise ValueError(f'profile {self.id} has negative values')

        return self

    @property
    def total(self) -> float:
        return float(self.values.sum())
