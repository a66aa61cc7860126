import numpy as np
from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt, StrictStr
from typing import List

from .profile_kind import ProfileKind


class FactorMap(BaseModel):
    """Masses, eigenvalues and principal coordinates of a correspondence map.

    Eigenvalues are non-increasing. Row and column coordinates are
    principal coordinates, so the mass-weighted variance of each axis
    equals its eigenvalue.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    row_ids: List[StrictStr]
    col_ids: List[StrictStr]
    row_masses: np.ndarray
    col_masses: np.ndarray
    eigenvalues: np.ndarray
    row_coords: np.ndarray
    col_coords: np.ndarray
    total_inertia: StrictFloat

    @property
    def k(self) -> StrictInt:
        return int(self.eigenvalues.shape[0])

    @property
    def inertia_ratios(self) -> np.ndarray:
        if self.total_inertia <= 0:
            return np.zeros_like(self.eigenvalues)

        return self.eigenvalues / self.total_inertia

    def coords_for(self, kind: ProfileKind) -> np.ndarray:
        if kind == ProfileKind.ROW:
            return self.row_coords

        return self.col_coords

    def ids_for(self, kind: ProfileKind) -> List[str]:
        if kind == ProfileKind.ROW:
            return self.row_ids

        return self.col_ids
