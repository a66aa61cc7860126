from pydantic import BaseModel, ConfigDict, StrictInt
from typing import Dict, List, Tuple

from gridex.constants import CHAIN_BASES

from .axis_binning import AxisBinning
from .merge_rule import MergeRule
from .point_id import PointId


class PointCode(BaseModel):
    """Per-axis digit sequences ordered from base 10 down to base 2."""

    model_config = ConfigDict(frozen=True)

    x: Tuple[StrictInt, ...]
    y: Tuple[StrictInt, ...]

    def digits_at(self, base: int) -> Tuple[int, int]:
        position = CHAIN_BASES.index(base)
        return self.x[position], self.y[position]


class CoarseningChain(BaseModel):
    model_config = ConfigDict(frozen=True)

    x_levels: Dict[StrictInt, AxisBinning]
    y_levels: Dict[StrictInt, AxisBinning]
    point_ids: List[PointId]
    point_codes: Dict[PointId, PointCode]
    merge_rule: MergeRule = MergeRule.LEAST_SUM

    @staticmethod
    def stage_label(base: int) -> str:
        if base < 2:
            raise ValueError(f'base {base} is not a chain base')

        is_prime = all(base % divisor for divisor in range(2, int(base**0.5) + 1))
        return 'p' if is_prime else 'm'

    def code_string(self, point_id: PointId, axis: str) -> str:
        code = self.point_codes[point_id]
        digits = code.x if axis == 'x' else code.y
        return f'{axis}:' + '-'.join(str(digit) for digit in digits)
