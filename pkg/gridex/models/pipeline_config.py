from pathlib import Path
from typing import List, Literal, Optional, Tuple
from pydantic import (
    BaseModel,
    ConfigDict,
    StrictFloat,
    StrictInt,
    StrictStr,
    model_validator,
)

from .bench_row import Distribution
from .merge_rule import MergeRule
from .render_spec import CellAnnotation


CloudSource = Literal['rows', 'columns', 'all']


class PipelineConfig(BaseModel):
    """Validated settings for one pipeline invocation.

    `pair` holds 1-based factor indices, as typed on the command line.
    `axes` of None means the default retained axis count for the input.
    """

    model_config = ConfigDict(frozen=True)

    input: Optional[Path] = None
    sup_rows: List[StrictStr] = []
    sup_cols: List[StrictStr] = []
    axes: Optional[StrictInt] = None
    pair: Tuple[StrictInt, StrictInt] = (1, 2)
    merge_rule: MergeRule = MergeRule.LEAST_SUM
    resolution: Optional[StrictInt] = None
    occupancy: StrictFloat | StrictInt = 4.0
    seed: StrictInt = 0
    out_dir: Path = Path('out')
    cloud: CloudSource = 'rows'
    annotation: CellAnnotation = CellAnnotation.BLANK_ZERO
    bench_n: List[StrictInt] = [1000, 10000]
    bench_queries: StrictInt = 100
    distribution: Distribution = 'uniform'
    bench_timing: bool = True

    @model_validator(mode='after')
    def check_ranges(self):
        first, second = self.pair
        if first < 1 or second < 1:
            raise ValueError(f'factor pair {self.pair} must use 1-based axis indices')

        if first == second:
            raise ValueError(f'factor pair {self.pair} must name two different axes')

        if self.axes is not None:
            if self.axes < 1:
                raise ValueError(f'retained axes must be positive, got {self.axes}')

            if max(self.pair) > self.axes:
                raise ValueError(f'factor pair {self.pair} exceeds retained axes {self.axes}')

        if self.resolution is not None and self.resolution < 1:
            raise ValueError(f'resolution must be at least 1, got {self.resolution}')

        if self.occupancy <= 0:
            raise ValueError(f'occupancy must be positive, got {self.occupancy}')

        if self.bench_queries < 1:
            raise ValueError('bench queries must be positive')

        if not self.bench_n or any(n < 1 for n in self.bench_n):
            raise ValueError('bench n values must be positive')

        if len(set(self.sup_rows)) != len(self.sup_rows) or len(set(self.sup_cols)) != len(self.sup_cols):
            raise ValueError('supplementary id lists must not repeat ids')

        return self

    @property
    def pair_index(self) -> Tuple[int, int]:
        return self.pair[0] - 1, self.pair[1] - 1
