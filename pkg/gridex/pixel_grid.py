import bisect
import logging
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import AxisRangeError, GridRangeError
from .models import (
    CloudSource,
    DuplicateGroup,
    FactorMap,
    GridHistogram,
    OverlapReport,
    PointId,
    UnitCloud,
)

logger = logging.getLogger(__name__)

Boundaries = Sequence[float]


def uniform_boundaries(base: int) -> Tuple[float, ...]:
    return tuple(idx / base for idx in range(base + 1))


def validate_boundaries(boundaries: Boundaries) -> None:
    if len(boundaries) < 2:
        raise GridRangeError("a grid axis needs at least one bin")

    if boundaries[0] != 0.0 or boundaries[-1] != 1.0:
        raise GridRangeError(f"boundaries must run from 0 to 1, got {boundaries[0]}..{boundaries[-1]}")

    if any(lo >= hi for lo, hi in zip(boundaries, boundaries[1:])):
        raise GridRangeError("boundaries must be strictly increasing")


def rescale_unit(
    factor_coords: np.ndarray,
    ids: List[PointId],
    axis_pair: Tuple[int, int] = (0, 1),
) -> UnitCloud:
    """Map each axis affinely from [min, max] onto [0, 1].

    A degenerate axis (max == min) maps every point to 0.0.
    """
    coords = np.asarray(factor_coords, dtype=np.float64).reshape(-1, 2)
    if coords.shape[0] < 1:
        raise GridRangeError("cannot rescale an empty cloud")

    unit = np.zeros_like(coords)
    params: List[Tuple[float, float]] = []
    for axis in range(2):
        low = float(coords[:, axis].min())
        high = float(coords[:, axis].max())
        params.append((low, high))

        if high > low:
            unit[:, axis] = (coords[:, axis] - low) / (high - low)

    unit.setflags(write=False)

    return UnitCloud(
        point_ids=list(ids),
        coords=unit,
        axis_pair=(int(axis_pair[0]), int(axis_pair[1])),
        rescale_params=(params[0], params[1]),
    )


def rescale_with(cloud: UnitCloud, factor_coords: np.ndarray) -> np.ndarray:
    """Place extra points in the unit frame of an existing cloud.

    Results may fall outside [0, 1]; they are clamped only when a cell is located.
    """
    coords = np.asarray(factor_coords, dtype=np.float64).reshape(-1, 2)
    unit = np.zeros_like(coords)
    for axis, (low, high) in enumerate(cloud.rescale_params):
        if high > low:
            unit[:, axis] = (coords[:, axis] - low) / (high - low)

    return unit


def build_cloud(
    factor_map: FactorMap,
    pair: Tuple[int, int],
    source: CloudSource = "rows",
) -> UnitCloud:
    """Rescale the chosen 0-based factor pair of the map's rows and/or columns."""
    first, second = pair
    if max(first, second) >= factor_map.k or min(first, second) < 0:
        raise AxisRangeError(
            f"factor pair ({first + 1},{second + 1}) outside retained axes 1..{factor_map.k}"
        )

    match source:
        case "rows":
            coords = factor_map.row_coords[:, [first, second]]
            ids: List[PointId] = list(factor_map.row_ids)

        case "columns":
            coords = factor_map.col_coords[:, [first, second]]
            ids = list(factor_map.col_ids)

        case _:
            coords = np.vstack(
                [
                    factor_map.row_coords[:, [first, second]],
                    factor_map.col_coords[:, [first, second]],
                ]
            )
            ids = [f"row:{row_id}" for row_id in factor_map.row_ids] + [
                f"col:{col_id}" for col_id in factor_map.col_ids
            ]

    return rescale_unit(coords, ids, axis_pair=(first, second))


def _locate(value: float, boundaries: Boundaries) -> int:
    if value < 0.0 or value > 1.0 or value != value:
        raise GridRangeError(f"coordinate {value} outside [0, 1]")

    return min(bisect.bisect_right(boundaries, value) - 1, len(boundaries) - 2)


def assign_cell(
    point: Tuple[float, float],
    base: int,
    boundaries_x: Boundaries | None = None,
    boundaries_y: Boundaries | None = None,
) -> Tuple[int, int]:
    """Locate the (i, j) cell holding `point`; 1.0 lands in the top bin."""
    if base < 1:
        raise GridRangeError(f"base {base} must be positive")

    if boundaries_x is None:
        boundaries_x = uniform_boundaries(base)

    if boundaries_y is None:
        boundaries_y = uniform_boundaries(base)

    for boundaries in (boundaries_x, boundaries_y):
        if len(boundaries) != base + 1:
            raise GridRangeError(f"base {base} needs {base + 1} boundaries, got {len(boundaries)}")

    return (
        _locate(float(point[0]), boundaries_x),
        _locate(float(point[1]), boundaries_y),
    )


def locate_axis(values: np.ndarray, boundaries: Boundaries) -> np.ndarray:
    """Vectorised `assign_cell` along one axis."""
    values = np.asarray(values, dtype=np.float64)
    if values.size and (np.any(values < 0.0) or np.any(values > 1.0) or np.any(np.isnan(values))):
        raise GridRangeError("coordinates must lie in [0, 1]")

    edges = np.asarray(boundaries, dtype=np.float64)
    cells = np.searchsorted(edges, values, side="right") - 1
    return np.minimum(cells, len(boundaries) - 2)


def histogram_at(
    cloud: UnitCloud,
    boundaries_x: Boundaries,
    boundaries_y: Boundaries,
) -> GridHistogram:
    validate_boundaries(boundaries_x)
    validate_boundaries(boundaries_y)
    if len(boundaries_x) != len(boundaries_y):
        raise GridRangeError("both axes need the same number of bins")

    base = len(boundaries_x) - 1
    cells_x = locate_axis(cloud.coords[:, 0], boundaries_x)
    cells_y = locate_axis(cloud.coords[:, 1], boundaries_y)

    members: List[List[List[PointId]]] = [[[] for _ in range(base)] for _ in range(base)]
    for point_id, i, j in zip(cloud.point_ids, cells_x.tolist(), cells_y.tolist()):
        members[i][j].append(point_id)

    counts = np.array(
        [[len(cell) for cell in column] for column in members],
        dtype=np.int64,
    ).reshape(base, base)
    counts.setflags(write=False)

    return GridHistogram(
        base=base,
        boundaries_x=tuple(float(edge) for edge in boundaries_x),
        boundaries_y=tuple(float(edge) for edge in boundaries_y),
        counts=counts,
        members=tuple(tuple(tuple(cell) for cell in column) for column in members),
    )


def build_histogram(cloud: UnitCloud, base: int) -> GridHistogram:
    if base < 1:
        raise GridRangeError(f"base {base} must be positive")

    boundaries = uniform_boundaries(base)
    histogram = histogram_at(cloud, boundaries, boundaries)

    logger.debug(
        "histogram base %d over %d points, max cell count %d",
        base,
        cloud.n,
        histogram.max_count,
    )

    return histogram


def overlap_report(cloud: UnitCloud, hist: GridHistogram) -> OverlapReport:
    """Largest cell plus groups of points with bit-identical coordinates."""
    flat = int(np.argmax(hist.counts))
    max_cell = divmod(flat, hist.base)

    groups: Dict[Tuple[float, float], List[PointId]] = defaultdict(list)
    for point_id, (u, v) in zip(cloud.point_ids, cloud.coords.tolist()):
        groups[(u, v)].append(point_id)

    duplicate_groups = [
        DuplicateGroup(coordinates=coordinates, point_ids=tuple(point_ids))
        for coordinates, point_ids in groups.items()
        if len(point_ids) > 1
    ]
    duplicate_groups.sort(key=lambda group: (-group.size, group.coordinates))

    report = OverlapReport(
        max_cell=(int(max_cell[0]), int(max_cell[1])),
        max_count=int(hist.counts[max_cell]),
        duplicate_groups=duplicate_groups,
    )

    if report.redundant_points:
        logger.info(
            "%d coincident points in %d groups, largest cell %s holds %d",
            report.redundant_points,
            len(duplicate_groups),
            report.max_cell,
            report.max_count,
        )

    return report
