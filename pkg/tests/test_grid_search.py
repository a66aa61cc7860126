import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridex.bench import resolution_for
from gridex.errors import SearchError
from gridex.grid_search import (
    build_index,
    nearest,
    nearest_bruteforce,
    nearest_many,
    ring_cells,
)
from gridex.models import UnitCloud
from tests.helpers import random_cloud


def assert_same_answer(index, cloud, query, exclude=None):
    found = nearest(index, query, exclude=exclude)
    expected = nearest_bruteforce(cloud, query, exclude=exclude)

    assert found.id == expected.id
    assert found.distance == expected.distance
    assert 1 <= found.candidates_compared <= cloud.n
    assert found.cells_examined <= index.resolution**2


def duplicate_heavy_cloud(rng: np.random.Generator, n: int) -> UnitCloud:
    anchors = rng.random((max(1, n // 50), 2))
    picks = rng.integers(0, anchors.shape[0], size=n)
    return UnitCloud.from_points(anchors[picks].tolist())


def boundary_queries(rng: np.random.Generator, count: int) -> np.ndarray:
    queries = rng.random((count, 2))
    edges = rng.integers(0, 4, size=count)
    queries[edges == 0, 0] = 0.0
    queries[edges == 1, 0] = 1.0
    queries[edges == 2, 1] = 0.0
    queries[edges == 3, 1] = 1.0
    return queries


def test_build_index_buckets_three_points():
    index = build_index(UnitCloud.from_points([(0.05, 0.05), (0.5, 0.5), (0.9, 0.9)]), 10)

    assert index.bucket_sizes() == {(0, 0): 1, (5, 5): 1, (9, 9): 1}
    assert index.bucket(5, 5)[0][0] == 1
    assert index.bucket(3, 3) == ()


def test_build_index_duplicates_share_a_bucket():
    index = build_index(UnitCloud.from_points([(0.33, 0.66)] * 25), 10)

    assert index.bucket_sizes() == {(3, 6): 25}


def test_build_index_conserves_points(rng):
    index = build_index(random_cloud(rng, 1000), 16)

    assert sum(index.bucket_sizes().values()) == 1000
    assert index.n == 1000
    assert index.cell_width == 1 / 16


def test_build_index_errors(rng):
    with pytest.raises(SearchError):
        build_index(random_cloud(rng, 10), 0)


def test_nearest_in_neighbouring_cell():
    cloud = UnitCloud.from_points([(0.05, 0.05), (0.5, 0.5), (0.9, 0.9)])
    result = nearest(build_index(cloud, 10), (0.52, 0.5))

    assert result.id == 1
    assert result.distance == pytest.approx(0.02, abs=1e-12)


def test_nearest_looks_beyond_the_query_cell():
    cloud = UnitCloud.from_points([(0.41, 0.41), (0.51, 0.49)], point_ids=["A", "B"])
    index = build_index(cloud, 10)

    result = nearest(index, (0.495, 0.45))

    assert result.id == "B"
    assert result.distance == pytest.approx(math.hypot(0.015, 0.04), abs=1e-12)
    assert result.cells_examined > 1
    assert nearest_bruteforce(cloud, (0.495, 0.45)).id == "B"


def test_nearest_ties_go_to_lowest_id():
    cloud = UnitCloud.from_points([(0.6, 0.5), (0.4, 0.5), (0.5, 0.6)], point_ids=[7, 3, 5])
    index = build_index(cloud, 10)

    assert nearest(index, (0.5, 0.5)).id == 3
    assert nearest_bruteforce(cloud, (0.5, 0.5)).id == 3


def test_bruteforce_single_point():
    cloud = UnitCloud.from_points([(0.2, 0.9)], point_ids=["only"])

    result = nearest_bruteforce(cloud, (0.8, 0.1))
    assert result.id == "only"
    assert result.candidates_compared == 1


def test_exclusion_returns_another_point():
    cloud = UnitCloud.from_points([(0.3, 0.3), (0.35, 0.3), (0.8, 0.8)], point_ids=["a", "b", "c"])
    index = build_index(cloud, 10)

    result = nearest(index, (0.3, 0.3), exclude="a")
    assert result.id == "b"
    assert nearest_bruteforce(cloud, (0.3, 0.3), exclude="a").id == "b"


def test_no_candidates_after_exclusion():
    cloud = UnitCloud.from_points([(0.5, 0.5)], point_ids=["only"])

    with pytest.raises(SearchError):
        nearest(build_index(cloud, 4), (0.1, 0.1), exclude="only")

    with pytest.raises(SearchError):
        nearest_bruteforce(cloud, (0.1, 0.1), exclude="only")


def test_queries_outside_the_square_are_exact(rng):
    cloud = random_cloud(rng, 400)
    index = build_index(cloud, 10)

    for query in (rng.random((100, 2)) * 3.0 - 1.0).tolist():
        assert_same_answer(index, cloud, query)


def test_ring_cells_tile_the_grid():
    resolution = 7
    for ci, cj in [(0, 0), (3, 3), (6, 2)]:
        seen = []
        for radius in range(resolution):
            ring = list(ring_cells(ci, cj, radius, resolution))
            assert len(ring) == len(set(ring))
            assert all(max(abs(i - ci), abs(j - cj)) == radius for i, j in ring)
            seen.extend(ring)

        assert sorted(seen) == [(i, j) for i in range(resolution) for j in range(resolution)]

    assert len(list(ring_cells(10, 10, 3, 50))) == 24


def test_nearest_matches_bruteforce_on_random_instances(rng):
    agreed = 0
    for instance in range(50):
        if instance % 5 == 0:
            cloud = duplicate_heavy_cloud(rng, 1000)

        else:
            cloud = random_cloud(rng, 1000)

        resolution = resolution_for(cloud.n, 4.0) if instance % 2 == 0 else int(rng.integers(1, 40))
        index = build_index(cloud, resolution)

        queries = boundary_queries(rng, 100) if instance % 3 == 0 else rng.random((100, 2))
        for position, query in enumerate(queries.tolist()):
            exclude = position if position % 10 == 0 else None
            assert_same_answer(index, cloud, query, exclude=exclude)
            agreed += 1

    assert agreed == 5000


def test_nearest_from_data_points_with_exclusion(rng):
    cloud = random_cloud(rng, 300)
    index = build_index(cloud, 9)

    for point_id, query in zip(cloud.point_ids, cloud.coords.tolist()):
        result = nearest(index, query, exclude=point_id)
        assert result.id != point_id
        assert_same_answer(index, cloud, query, exclude=point_id)


@settings(max_examples=100, deadline=None)
@given(
    points=st.lists(
        st.tuples(
            st.floats(min_value=0.0, max_value=1.0),
            st.floats(min_value=0.0, max_value=1.0),
        ),
        min_size=1,
        max_size=40,
    ),
    query=st.tuples(
        st.floats(min_value=-0.5, max_value=1.5),
        st.floats(min_value=-0.5, max_value=1.5),
    ),
    resolution=st.integers(min_value=1, max_value=25),
)
def test_nearest_equals_bruteforce_property(points, query, resolution):
    cloud = UnitCloud.from_points(points)
    assert_same_answer(build_index(cloud, resolution), cloud, query)


def test_nearest_many_answers_in_order(rng):
    cloud = random_cloud(rng, 200)
    index = build_index(cloud, 7)
    queries = rng.random((20, 2)).tolist()

    results = nearest_many(index, queries)

    assert [result.id for result in results] == [nearest_bruteforce(cloud, query).id for query in queries]
