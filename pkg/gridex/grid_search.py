import logging
import math
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import SearchError
from .models import NNResult, PointId, UnitCloud
from .pixel_grid import locate_axis, uniform_boundaries

logger = logging.getLogger(__name__)

Entry = Tuple[PointId, float, float]

# slack keeps float rounding in the margin from ending a search early
MARGIN_SLACK = 1e-12


class GridIndex:
    """Bucketed unit-square points for exact nearest neighbour queries.

    Buckets live in a dict keyed by (i, j) so sparse high resolutions stay
    cheap. The index is never modified after construction.
    """

    __slots__ = (
        "resolution",
        "n",
        "buckets",
        "edges",
    )

    def __init__(
        self,
        resolution: int,
        buckets: Dict[Tuple[int, int], Tuple[Entry, ...]],
        n: int,
    ) -> None:
        self.resolution = resolution
        self.buckets = buckets
        self.n = n
        self.edges = uniform_boundaries(resolution)

    @property
    def cell_width(self) -> float:
        return 1.0 / self.resolution

    def bucket(self, i: int, j: int) -> Tuple[Entry, ...]:
        return self.buckets.get((i, j), ())

    def bucket_sizes(self) -> Dict[Tuple[int, int], int]:
        return {cell: len(entries) for cell, entries in self.buckets.items()}

    def locate(self, u: float, v: float) -> Tuple[int, int]:
        """Cell of a query; coordinates outside [0, 1] are clamped first."""
        cells = locate_axis(
            np.array([min(max(u, 0.0), 1.0), min(max(v, 0.0), 1.0)]),
            self.edges,
        )
        return int(cells[0]), int(cells[1])


def build_index(cloud: UnitCloud, resolution: int) -> GridIndex:
    if resolution < 1:
        raise SearchError(f"resolution {resolution} must be at least 1")

    if cloud.n == 0:
        raise SearchError("cannot index an empty cloud")

    edges = uniform_boundaries(resolution)
    cells_x = locate_axis(cloud.coords[:, 0], edges).tolist()
    cells_y = locate_axis(cloud.coords[:, 1], edges).tolist()

    buckets: Dict[Tuple[int, int], List[Entry]] = defaultdict(list)
    for point_id, (u, v), i, j in zip(cloud.point_ids, cloud.coords.tolist(), cells_x, cells_y):
        buckets[(i, j)].append((point_id, u, v))

    logger.debug(
        "grid index G=%d: %d points in %d occupied cells",
        resolution,
        cloud.n,
        len(buckets),
    )

    return GridIndex(
        resolution,
        {cell: tuple(entries) for cell, entries in buckets.items()},
        cloud.n,
    )


def ring_cells(ci: int, cj: int, radius: int, resolution: int) -> Iterator[Tuple[int, int]]:
    """Cells at Chebyshev distance exactly `radius` from (ci, cj), inside the grid."""
    if radius == 0:
        yield ci, cj
        return

    low_i, high_i = ci - radius, ci + radius
    low_j, high_j = cj - radius, cj + radius

    for i in range(max(low_i, 0), min(high_i, resolution - 1) + 1):
        if low_j >= 0:
            yield i, low_j

        if high_j < resolution:
            yield i, high_j

    for j in range(max(low_j + 1, 0), min(high_j - 1, resolution - 1) + 1):
        if low_i >= 0:
            yield low_i, j

        if high_i < resolution:
            yield high_i, j


def _margin(index: GridIndex, u: float, v: float, ci: int, cj: int, radius: int) -> float:
    """Distance from the query to the nearest unclipped side of the examined square."""
    edges = index.edges
    resolution = index.resolution
    margin = math.inf

    if ci - radius > 0:
        margin = min(margin, u - edges[ci - radius])

    if ci + radius + 1 < resolution:
        margin = min(margin, edges[ci + radius + 1] - u)

    if cj - radius > 0:
        margin = min(margin, v - edges[cj - radius])

    if cj + radius + 1 < resolution:
        margin = min(margin, edges[cj + radius + 1] - v)

    return margin


def nearest(
    index: GridIndex,
    query: Sequence[float],
    exclude: Optional[PointId] = None,
) -> NNResult:
    """Exact nearest neighbour by ring expansion around the query cell.

    Rings stop once the best distance found is inside the examined square's
    margin. Ties go to the lowest point id.
    """
    u, v = float(query[0]), float(query[1])
    ci, cj = index.locate(u, v)

    best_d2 = math.inf
    best_id: Optional[PointId] = None
    cells_examined = 0
    candidates_compared = 0

    radius = 0
    while True:
        for cell in ring_cells(ci, cj, radius, index.resolution):
            cells_examined += 1
            for point_id, px, py in index.buckets.get(cell, ()):
                if exclude is not None and point_id == exclude:
                    continue

                candidates_compared += 1
                dx = px - u
                dy = py - v
                d2 = dx * dx + dy * dy
                if d2 < best_d2 or (d2 == best_d2 and point_id < best_id):
                    best_d2 = d2
                    best_id = point_id

        margin = _margin(index, u, v, ci, cj, radius)
        if margin == math.inf:
            break

        if best_id is not None and math.sqrt(best_d2) + MARGIN_SLACK < margin:
            break

        radius += 1

    if best_id is None:
        raise SearchError("no candidate points left after exclusion")

    return NNResult(
        id=best_id,
        distance=math.sqrt(best_d2),
        cells_examined=cells_examined,
        candidates_compared=candidates_compared,
    )


def nearest_many(
    index: GridIndex,
    queries: Sequence[Sequence[float]],
    exclude: Optional[PointId] = None,
) -> List[NNResult]:
    return [nearest(index, query, exclude=exclude) for query in queries]


def nearest_bruteforce(
    cloud: UnitCloud,
    query: Sequence[float],
    exclude: Optional[PointId] = None,
) -> NNResult:
    u, v = float(query[0]), float(query[1])

    candidates = np.ones(cloud.n, dtype=bool)
    if exclude is not None:
        candidates &= np.array([point_id != exclude for point_id in cloud.point_ids], dtype=bool)

    count = int(candidates.sum())
    if count == 0:
        raise SearchError("no candidate points left after exclusion")

    dx = cloud.coords[:, 0] - u
    dy = cloud.coords[:, 1] - v
    d2 = np.where(candidates, dx * dx + dy * dy, np.inf)
    best_d2 = float(d2.min())

    tied = np.flatnonzero(d2 == best_d2).tolist()
    best_id = min(cloud.point_ids[position] for position in tied)

    return NNResult(
        id=best_id,
        distance=math.sqrt(best_d2),
        cells_examined=1,
        candidates_compared=count,
    )
