import numpy as np
from pydantic import BaseModel, ConfigDict, StrictStr, model_validator
from typing import List


class DataMatrix(BaseModel):
    """Non-negative counts with row and column identifiers.

    Rows and columns listed here are the active elements of the analysis.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    row_ids: List[StrictStr]
    col_ids: List[StrictStr]
    values: np.ndarray

    @model_validator(mode='after')
    def check_invariants(self):
        values = self.values
        if values.ndim != 2 or values.shape != (len(self.row_ids), len(self.col_ids)):
            raise ValueError(
                f'values shape {values.shape} does not match '
                f'{len(self.row_ids)} rows x {len(self.col_ids)} columns'
            )

        if len(set(self.row_ids)) != len(self.row_ids):
            raise ValueError('row ids must be unique')

        if len(set(self.col_ids)) != len(self.col_ids):
            raise ValueError('column ids must be unique')

        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise ValueError('values must be finite and non-negative')

        if np.any(values.sum(axis=1) <= 0) or np.any(values.sum(axis=0) <= 0):
            raise ValueError('active rows and columns must have a positive margin')

        return self

    @classmethod
    def from_rows(
        cls,
        rows: List[List[float]],
        row_ids: List[str] | None = None,
        col_ids: List[str] | None = None,
    ) -> "DataMatrix":
        values = np.asarray(rows, dtype=np.float64)
        if row_ids is None:
            row_ids = [f'r{idx}' for idx in range(values.shape[0])]

        if col_ids is None:
            col_ids = [f'c{idx}' for idx in range(values.shape[1])]

        values.setflags(write=False)
        return cls(row_ids=row_ids, col_ids=col_ids, values=values)

    @property
    def n(self) -> int:
        return len(self.row_ids)

    @property
    def m(self) -> int:
        return len(self.col_ids)

    @property
    def total(self) -> float:
        return float(self.values.sum())
