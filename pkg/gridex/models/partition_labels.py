from collections import defaultdict
from pydantic import BaseModel, ConfigDict, StrictInt
from typing import Dict, List, Tuple

from .point_id import PointId


class PartitionLabels(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: StrictInt
    labels: Dict[PointId, Tuple[StrictInt, StrictInt]]

    def blocks(self) -> Dict[Tuple[int, int], List[PointId]]:
        grouped: Dict[Tuple[int, int], List[PointId]] = defaultdict(list)
        for point_id, cell in self.labels.items():
            grouped[cell].append(point_id)

        return dict(grouped)
