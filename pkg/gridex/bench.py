import logging
import math
import time
from typing import List, Sequence

import numpy as np

from .grid_search import build_index, nearest
from .models import BenchRow, Distribution, UnitCloud

logger = logging.getLogger(__name__)


def resolution_for(n: int, occupancy: float) -> int:
    """Grid resolution giving a mean of about `occupancy` points per cell."""
    return max(1, int(round(math.sqrt(n / occupancy))))


def sample_points(
    rng: np.random.Generator,
    count: int,
    distribution: Distribution = "uniform",
) -> np.ndarray:
    match distribution:
        case "uniform":
            return rng.random((count, 2))

        case "skewed":
            return rng.beta(0.5, 2.0, size=(count, 2))

        case _:
            raise ValueError(f"unknown distribution {distribution}")


def bench_uniform(
    n_values: Sequence[int],
    occupancy: float,
    queries: int,
    seed: int,
    distribution: Distribution = "uniform",
    timing: bool = True,
) -> List[BenchRow]:
    """Measure per-query work of the grid index as n grows at fixed occupancy.

    Each n draws its points and queries from its own generator seeded by
    (seed, n), so rows do not depend on which other n values were run.
    """
    if not n_values:
        raise ValueError("bench needs at least one n value")

    if occupancy <= 0:
        raise ValueError(f"occupancy must be positive, got {occupancy}")

    if queries < 1:
        raise ValueError(f"queries per n must be positive, got {queries}")

    rows: List[BenchRow] = []
    for n in n_values:
        rng = np.random.default_rng([seed, n])
        points = sample_points(rng, n, distribution)
        queries_uv = sample_points(rng, queries, distribution).tolist()

        points.setflags(write=False)
        cloud = UnitCloud(point_ids=list(range(n)), coords=points)
        resolution = resolution_for(n, occupancy)
        index = build_index(cloud, resolution)

        candidates = np.empty(queries, dtype=np.float64)
        cells = np.empty(queries, dtype=np.float64)
        elapsed_ns = 0
        for position, query in enumerate(queries_uv):
            start = time.perf_counter_ns()
            result = nearest(index, query)
            elapsed_ns += time.perf_counter_ns() - start

            candidates[position] = result.candidates_compared
            cells[position] = result.cells_examined

        row = BenchRow(
            n=n,
            G=resolution,
            mean_candidates=float(candidates.mean()),
            median_candidates=float(np.median(candidates)),
            mean_cells=float(cells.mean()),
            p99_cells=float(np.percentile(cells, 99)),
            wall_time_us_mean=(elapsed_ns / queries / 1000.0) if timing else None,
            bruteforce_candidates=n,
            distribution=distribution,
        )

        logger.info(
            "bench n=%d G=%d: mean candidates %.2f, mean cells %.2f",
            n,
            resolution,
            row.mean_candidates,
            row.mean_cells,
        )

        rows.append(row)

    return rows
