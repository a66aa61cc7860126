from typing import Literal, Optional
from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt


Distribution = Literal['uniform', 'skewed']


class BenchRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: StrictInt
    G: StrictInt
    mean_candidates: StrictFloat
    median_candidates: StrictFloat
    mean_cells: StrictFloat
    p99_cells: StrictFloat
    wall_time_us_mean: Optional[StrictFloat] = None
    bruteforce_candidates: StrictInt = 0
    distribution: Distribution = 'uniform'
