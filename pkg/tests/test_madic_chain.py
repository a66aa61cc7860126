import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridex.constants import BAIRE_LEVELS, CHAIN_BASES
from gridex.errors import ChainError
from gridex.madic_chain import (
    baire_bucket,
    baire_distance,
    build_chain,
    chain_histogram,
    coarsen_axis,
    merge_position,
    partition_at,
    partition_rows,
)
from gridex.models import AxisBinning, CoarseningChain, MergeRule, UnitCloud
from gridex.pixel_grid import build_histogram, uniform_boundaries
from tests.helpers import random_cloud


def binning(marginal) -> AxisBinning:
    return AxisBinning(
        base=len(marginal),
        boundaries=uniform_boundaries(len(marginal)),
        marginal=tuple(marginal),
    )


def chain_of(cloud: UnitCloud, merge_rule: MergeRule = MergeRule.LEAST_SUM) -> CoarseningChain:
    return build_chain(build_histogram(cloud, 10), cloud, merge_rule)


def exhaustive_merge(marginal):
    """Every adjacent-pair merge, keeping the first with the least pair sum."""
    best = None
    for position in range(len(marginal) - 1):
        merged = list(marginal[:position]) + [marginal[position] + marginal[position + 1]] + list(marginal[position + 2:])
        pair_sum = marginal[position] + marginal[position + 1]
        if best is None or pair_sum < best[0]:
            best = (pair_sum, position, merged)

    return best[1], best[2]


def test_coarsen_merges_least_sum_pair():
    coarse = coarsen_axis(binning([1, 5, 0, 0, 3, 2, 8, 4, 6, 1]))

    assert coarse.base == 9
    assert coarse.marginal == (1, 5, 0, 3, 2, 8, 4, 6, 1)
    assert coarse.boundaries == (0.0, 0.1, 0.2, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)


def test_coarsen_tie_takes_lowest_index():
    assert coarsen_axis(binning([3, 3, 3])).marginal == (6, 3)


def test_coarsen_least_abs_diff_rule():
    assert merge_position((4, 1, 2, 9), MergeRule.LEAST_ABS_DIFF) == 1
    assert coarsen_axis(binning([4, 1, 2, 9]), MergeRule.LEAST_ABS_DIFF).marginal == (4, 3, 9)
    assert coarsen_axis(binning([3, 3, 3]), MergeRule.LEAST_ABS_DIFF).marginal == (6, 3)


def test_coarsen_stops_at_two_bins():
    with pytest.raises(ChainError):
        coarsen_axis(binning([2, 5]))


def test_coarsen_agrees_with_exhaustive_oracle(rng):
    for _ in range(1000):
        marginal = rng.integers(0, 12, size=10).tolist()
        position, merged = exhaustive_merge(marginal)

        coarse = coarsen_axis(binning(marginal))
        assert merge_position(tuple(marginal)) == position
        assert list(coarse.marginal) == merged
        assert coarse.total == sum(marginal)


@settings(max_examples=200, deadline=None)
@given(marginal=st.lists(st.integers(min_value=0, max_value=50), min_size=3, max_size=10))
def test_coarsen_removes_one_interior_boundary(marginal):
    fine = binning(marginal)
    coarse = coarsen_axis(fine)

    removed = set(fine.boundaries) - set(coarse.boundaries)
    assert len(removed) == 1
    assert 0.0 not in removed and 1.0 not in removed
    assert set(coarse.boundaries) < set(fine.boundaries)
    assert coarse.total == fine.total


def test_chain_carries_the_base_nine_example(rng):
    marginal = [1, 5, 0, 0, 3, 2, 8, 4, 6, 1]
    xs = [(cell + 0.5) / 10 for cell, count in enumerate(marginal) for _ in range(count)]
    points = [(x, float(y)) for x, y in zip(xs, rng.random(len(xs)))]

    chain = chain_of(UnitCloud.from_points(points))

    assert chain.x_levels[10].marginal == tuple(marginal)
    assert chain.x_levels[9].marginal == (1, 5, 0, 3, 2, 8, 4, 6, 1)


def test_chain_of_single_point():
    chain = chain_of(UnitCloud.from_points([(0.37, 0.81)], point_ids=["solo"]))

    for base in CHAIN_BASES:
        assert sum(chain.x_levels[base].marginal) == 1
        assert sum(chain.y_levels[base].marginal) == 1
        assert chain.x_levels[base].marginal.count(1) == 1

    code = chain.point_codes["solo"]
    assert len(code.x) == len(code.y) == BAIRE_LEVELS
    assert code.digits_at(10) == (3, 8)


def test_chain_conserves_and_nests(rng):
    cloud = random_cloud(rng, 500)
    chain = chain_of(cloud)

    for base in CHAIN_BASES:
        for levels in (chain.x_levels, chain.y_levels):
            assert levels[base].total == 500

        assert chain_histogram(chain, cloud, base).total == 500

    for base in CHAIN_BASES[1:]:
        for levels in (chain.x_levels, chain.y_levels):
            finer = set(levels[base + 1].boundaries)
            coarser = set(levels[base].boundaries)
            assert coarser < finer
            assert len(finer - coarser) == 1


def test_chain_rejects_other_bases(rng):
    cloud = random_cloud(rng, 20)

    with pytest.raises(ChainError):
        build_chain(build_histogram(cloud, 9), cloud)

    with pytest.raises(ChainError):
        build_chain(build_histogram(cloud, 10), random_cloud(rng, 21))


def test_stage_labels_and_code_strings(rng):
    labels = [CoarseningChain.stage_label(base) for base in CHAIN_BASES[1:]]
    assert labels == ["m", "m", "p", "m", "p", "m", "p", "p"]

    chain = chain_of(UnitCloud.from_points([(1.0, 0.0)], point_ids=["edge"]))
    assert chain.code_string("edge", "x") == "x:9-8-7-6-5-4-3-2-1"
    assert chain.code_string("edge", "y") == "y:0-0-0-0-0-0-0-0-0"


def test_partition_at_coarsest_base():
    chain = chain_of(UnitCloud.from_points([(0.05, 0.05), (0.95, 0.95)], point_ids=["low", "high"]))
    partition = partition_at(chain, 2)

    assert partition.labels == {"low": (0, 0), "high": (1, 1)}
    assert partition.blocks() == {(0, 0): ["low"], (1, 1): ["high"]}
    assert baire_distance(chain, "low", "high") == 1.0


def test_partition_at_unknown_base(rng):
    chain = chain_of(random_cloud(rng, 10))

    for base in (1, 11):
        with pytest.raises(ChainError):
            partition_at(chain, base)


def test_partitions_refine_down_the_chain(rng):
    for _ in range(100):
        cloud = random_cloud(rng, int(rng.integers(1, 300)))
        chain = chain_of(cloud, MergeRule.LEAST_SUM if rng.random() < 0.5 else MergeRule.LEAST_ABS_DIFF)

        for base in CHAIN_BASES[1:]:
            finer = partition_at(chain, base + 1).labels
            coarser = partition_at(chain, base).labels

            parent = {}
            for point_id, cell in finer.items():
                assert parent.setdefault(cell, coarser[point_id]) == coarser[point_id]


def test_chain_histograms_match_partitions(rng):
    cloud = random_cloud(rng, 300)
    chain = chain_of(cloud)

    for base in CHAIN_BASES:
        hist = chain_histogram(chain, cloud, base)
        for point_id, (i, j) in partition_at(chain, base).labels.items():
            assert point_id in hist.cell_members(i, j)


def test_baire_self_distance_is_smallest(rng):
    cloud = random_cloud(rng, 50)
    chain = chain_of(cloud)

    for point_id in cloud.point_ids:
        assert baire_distance(chain, point_id, point_id) == 2.0**-9


def test_baire_identical_coordinates():
    chain = chain_of(UnitCloud.from_points([(0.3, 0.4), (0.3, 0.4), (0.9, 0.1)]))

    assert baire_distance(chain, 0, 1) == 2.0**-9
    assert baire_bucket(chain, 0, 9) == {0, 1}


def test_baire_distance_is_symmetric_ultrametric(rng):
    checked = 0
    for _ in range(20):
        cloud = random_cloud(rng, 200)
        # clusters of coincident points give long shared prefixes
        coords = cloud.coords.copy()
        coords[100:150] = coords[0]
        coords.setflags(write=False)
        cloud = UnitCloud(point_ids=cloud.point_ids, coords=coords)
        chain = chain_of(cloud)

        for a, b, c in rng.integers(0, 200, size=(5000, 3)).tolist():
            d_ab = baire_distance(chain, a, b)
            d_ac = baire_distance(chain, a, c)
            assert d_ab == baire_distance(chain, b, a)
            assert d_ac == baire_distance(chain, c, a)
            assert d_ac <= max(d_ab, baire_distance(chain, b, c))
            checked += 1

    assert checked == 100_000


def test_baire_bucket_matches_scan(rng):
    cloud = random_cloud(rng, 150)
    chain = chain_of(cloud)

    for point_id, depth in itertools.product(cloud.point_ids[:15], range(BAIRE_LEVELS + 1)):
        scanned = {
            other
            for other in cloud.point_ids
            if baire_distance(chain, point_id, other) <= 2.0**-depth
        }
        bucket = baire_bucket(chain, point_id, depth)
        assert bucket == scanned
        assert point_id in bucket

    assert baire_bucket(chain, 0, 0) == set(cloud.point_ids)


def test_baire_errors(rng):
    chain = chain_of(random_cloud(rng, 10))

    with pytest.raises(ChainError):
        baire_bucket(chain, 0, 10)

    with pytest.raises(ChainError):
        baire_bucket(chain, "missing", 3)

    with pytest.raises(ChainError):
        baire_distance(chain, 0, "missing")


def test_partition_rows_cover_every_base(rng):
    cloud = random_cloud(rng, 40)
    chain = chain_of(cloud)
    rows = partition_rows(chain)

    assert len(rows) == 40 * len(CHAIN_BASES)
    assert [row[1] for row in rows[::40]] == list(CHAIN_BASES)
    assert np.all(np.array([row[2] for row in rows]) >= 0)
