"""Stagewise coarsening of the base-10 grid down to base 2.

Each stage merges, per axis, one pair of adjacent bins. The bases reached
(10, 9, ..., 2) give every point a digit per axis per base; the digits
induce nested partitions and a Baire distance over the point set.
"""

import logging
from typing import Dict, List, Set

import numpy as np

from .constants import BAIRE_LEVELS, CHAIN_BASES, COARSEST_BASE, FINEST_BASE
from .errors import ChainError
from .models import (
    AxisBinning,
    CoarseningChain,
    GridHistogram,
    MergeRule,
    PartitionLabels,
    PointCode,
    PointId,
    UnitCloud,
)
from .pixel_grid import histogram_at, locate_axis

logger = logging.getLogger(__name__)


def merge_position(marginal: tuple[int, ...], merge_rule: MergeRule = MergeRule.LEAST_SUM) -> int:
    """Index i of the adjacent pair (i, i + 1) to merge; lowest i wins ties."""
    if merge_rule == MergeRule.LEAST_SUM:
        scores = [left + right for left, right in zip(marginal, marginal[1:])]

    else:
        scores = [abs(left - right) for left, right in zip(marginal, marginal[1:])]

    return scores.index(min(scores))


def coarsen_axis(
    binning: AxisBinning,
    merge_rule: MergeRule = MergeRule.LEAST_SUM,
) -> AxisBinning:
    if binning.base < 3:
        raise ChainError(f"cannot coarsen base {binning.base}; the result needs at least 2 bins")

    position = merge_position(binning.marginal, merge_rule)
    marginal = (
        binning.marginal[:position]
        + (binning.marginal[position] + binning.marginal[position + 1],)
        + binning.marginal[position + 2:]
    )
    boundaries = binning.boundaries[: position + 1] + binning.boundaries[position + 2:]

    logger.debug(
        "base %d -> %d: merged bins %d,%d (%s)",
        binning.base,
        binning.base - 1,
        position,
        position + 1,
        merge_rule.value,
    )

    return AxisBinning(
        base=binning.base - 1,
        boundaries=boundaries,
        marginal=marginal,
    )


def _levels(first: AxisBinning, merge_rule: MergeRule) -> Dict[int, AxisBinning]:
    levels = {first.base: first}
    current = first
    while current.base > COARSEST_BASE:
        current = coarsen_axis(current, merge_rule)
        levels[current.base] = current

    return levels


def build_chain(
    hist10: GridHistogram,
    cloud: UnitCloud,
    merge_rule: MergeRule = MergeRule.LEAST_SUM,
) -> CoarseningChain:
    if hist10.base != FINEST_BASE:
        raise ChainError(f"chain needs a base-{FINEST_BASE} histogram, got base {hist10.base}")

    if hist10.total != cloud.n:
        raise ChainError(f"histogram holds {hist10.total} points but the cloud has {cloud.n}")

    x_levels = _levels(
        AxisBinning(
            base=hist10.base,
            boundaries=hist10.boundaries_x,
            marginal=tuple(int(count) for count in hist10.counts.sum(axis=1)),
        ),
        merge_rule,
    )
    y_levels = _levels(
        AxisBinning(
            base=hist10.base,
            boundaries=hist10.boundaries_y,
            marginal=tuple(int(count) for count in hist10.counts.sum(axis=0)),
        ),
        merge_rule,
    )

    x_digits = np.column_stack(
        [locate_axis(cloud.coords[:, 0], x_levels[base].boundaries) for base in CHAIN_BASES]
    ).tolist()
    y_digits = np.column_stack(
        [locate_axis(cloud.coords[:, 1], y_levels[base].boundaries) for base in CHAIN_BASES]
    ).tolist()

    point_codes = {
        point_id: PointCode(x=tuple(x_code), y=tuple(y_code))
        for point_id, x_code, y_code in zip(cloud.point_ids, x_digits, y_digits)
    }

    logger.info(
        "coarsening chain over %d points: %s",
        cloud.n,
        ", ".join(f"{CoarseningChain.stage_label(base)} = {base}" for base in CHAIN_BASES[1:]),
    )

    return CoarseningChain(
        x_levels=x_levels,
        y_levels=y_levels,
        point_ids=list(cloud.point_ids),
        point_codes=point_codes,
        merge_rule=merge_rule,
    )


def _check_base(base: int) -> int:
    if base not in CHAIN_BASES:
        raise ChainError(f"base {base} outside {COARSEST_BASE}..{FINEST_BASE}")

    return CHAIN_BASES.index(base)


def partition_at(chain: CoarseningChain, base: int) -> PartitionLabels:
    position = _check_base(base)
    return PartitionLabels(
        base=base,
        labels={
            point_id: (code.x[position], code.y[position])
            for point_id, code in chain.point_codes.items()
        },
    )


def chain_histogram(chain: CoarseningChain, cloud: UnitCloud, base: int) -> GridHistogram:
    """The cloud's histogram under the merged boundaries of one chain level."""
    _check_base(base)
    return histogram_at(
        cloud,
        chain.x_levels[base].boundaries,
        chain.y_levels[base].boundaries,
    )


def _code(chain: CoarseningChain, point_id: PointId) -> PointCode:
    code = chain.point_codes.get(point_id)
    if code is None:
        raise ChainError(f"unknown point id {point_id!r}")

    return code


def common_levels(first: PointCode, second: PointCode) -> int:
    """Number of leading levels, coarsest first, where both axis digits agree."""
    shared = 0
    for position in range(BAIRE_LEVELS - 1, -1, -1):
        if first.x[position] != second.x[position] or first.y[position] != second.y[position]:
            break

        shared += 1

    return shared


def baire_distance(chain: CoarseningChain, id_a: PointId, id_b: PointId) -> float:
    return 2.0 ** -common_levels(_code(chain, id_a), _code(chain, id_b))


def baire_bucket(chain: CoarseningChain, point_id: PointId, depth: int) -> Set[PointId]:
    """Points within Baire distance 2**-depth of `point_id`."""
    if depth < 0 or depth > BAIRE_LEVELS:
        raise ChainError(f"depth {depth} outside 0..{BAIRE_LEVELS}")

    anchor = _code(chain, point_id)
    if depth == 0:
        return set(chain.point_ids)

    # sharing the first `depth` levels is membership of one block at base depth + 1
    position = CHAIN_BASES.index(COARSEST_BASE + depth - 1)
    cell = (anchor.x[position], anchor.y[position])

    return {
        other
        for other, code in chain.point_codes.items()
        if (code.x[position], code.y[position]) == cell
    }


def partition_rows(chain: CoarseningChain) -> List[tuple[PointId, int, int, int]]:
    """(id, base, cell_i, cell_j) for every point at every base, finest first."""
    return [
        (point_id, base, code.x[position], code.y[position])
        for position, base in enumerate(CHAIN_BASES)
        for point_id, code in chain.point_codes.items()
    ]
