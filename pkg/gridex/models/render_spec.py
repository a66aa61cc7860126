from enum import Enum
from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr
from typing import List, Tuple


class RenderMode(Enum):
    TEXT = 'text'
    SVG = 'svg'


class CellAnnotation(Enum):
    COUNTS = 'counts'
    BLANK_ZERO = 'blank-zero'


class Marker(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: StrictStr
    cell: Tuple[StrictInt, StrictInt]


class RenderSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: RenderMode = RenderMode.TEXT
    annotation: CellAnnotation = CellAnnotation.BLANK_ZERO
    markers: List[Marker] = []
