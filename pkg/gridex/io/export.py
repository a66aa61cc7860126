import json
import pathlib
from typing import Any, Dict, Iterable, List, Sequence

import pandas as pd

from gridex.constants import CHAIN_BASES
from gridex.madic_chain import partition_rows
from gridex.models import (
    AxisBinning,
    BenchRow,
    CoarseningChain,
    FactorMap,
    GridHistogram,
    NNResult,
    OverlapReport,
    ProfileKind,
    SupplementaryPoint,
)

FLOAT_FORMAT = "%.17g"

BENCH_COLUMNS = [
    "n",
    "G",
    "mean_candidates",
    "median_candidates",
    "mean_cells",
    "p99_cells",
    "wall_time_us_mean",
]

SUPPLEMENTARY_KINDS = {
    ProfileKind.ROW: "sup-row",
    ProfileKind.COLUMN: "sup-col",
}


def _write_json(path: pathlib.Path, payload: Dict[str, Any]) -> pathlib.Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path


def _write_frame(path: pathlib.Path, frame: pd.DataFrame) -> pathlib.Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return path


def coordinates_frame(
    factor_map: FactorMap,
    supplementary: Sequence[SupplementaryPoint] = (),
) -> pd.DataFrame:
    axes = [f"axis{axis + 1}" for axis in range(factor_map.k)]

    records: List[List[Any]] = []
    for kind in (ProfileKind.ROW, ProfileKind.COLUMN):
        records.extend(
            [point_id, kind.value, *row]
            for point_id, row in zip(factor_map.ids_for(kind), factor_map.coords_for(kind).tolist())
        )

    records.extend(
        [point.id, SUPPLEMENTARY_KINDS[point.kind], *point.coordinates] for point in supplementary
    )

    return pd.DataFrame.from_records(records, columns=["id", "kind", *axes])


def write_coordinates(
    path: pathlib.Path,
    factor_map: FactorMap,
    supplementary: Sequence[SupplementaryPoint] = (),
) -> pathlib.Path:
    return _write_frame(path, coordinates_frame(factor_map, supplementary))


def write_factor_map(path: pathlib.Path, factor_map: FactorMap) -> pathlib.Path:
    return _write_json(
        path,
        {
            "k": factor_map.k,
            "total_inertia": factor_map.total_inertia,
            "eigenvalues": factor_map.eigenvalues.tolist(),
            "inertia_ratios": factor_map.inertia_ratios.tolist(),
            "row_masses": dict(zip(factor_map.row_ids, factor_map.row_masses.tolist())),
            "col_masses": dict(zip(factor_map.col_ids, factor_map.col_masses.tolist())),
        },
    )


def write_histogram(
    path: pathlib.Path,
    hist: GridHistogram,
    report: OverlapReport | None = None,
) -> pathlib.Path:
    payload: Dict[str, Any] = {
        "base": hist.base,
        "boundaries_x": list(hist.boundaries_x),
        "boundaries_y": list(hist.boundaries_y),
        "counts": hist.counts.tolist(),
    }

    if report is not None:
        payload["overlap"] = {
            "max_cell": list(report.max_cell),
            "max_count": report.max_count,
            "redundant_points": report.redundant_points,
            "duplicate_groups": [
                {
                    "coordinates": list(group.coordinates),
                    "size": group.size,
                    "ids": list(group.point_ids),
                }
                for group in report.duplicate_groups
            ],
        }

    return _write_json(path, payload)


def _levels_payload(levels: Dict[int, AxisBinning]) -> List[Dict[str, Any]]:
    return [
        {
            "base": base,
            "label": CoarseningChain.stage_label(base),
            "boundaries": list(levels[base].boundaries),
            "marginal": list(levels[base].marginal),
        }
        for base in CHAIN_BASES
    ]


def write_chain(path: pathlib.Path, chain: CoarseningChain) -> pathlib.Path:
    return _write_json(
        path,
        {
            "merge_rule": chain.merge_rule.value,
            "bases": list(CHAIN_BASES),
            "axes": {
                "x": _levels_payload(chain.x_levels),
                "y": _levels_payload(chain.y_levels),
            },
            "points": [
                {
                    "id": point_id,
                    "x": chain.code_string(point_id, "x"),
                    "y": chain.code_string(point_id, "y"),
                }
                for point_id in chain.point_ids
            ],
        },
    )


def write_partitions(path: pathlib.Path, chain: CoarseningChain) -> pathlib.Path:
    return _write_frame(
        path,
        pd.DataFrame.from_records(
            partition_rows(chain),
            columns=["id", "base", "cell_i", "cell_j"],
        ),
    )


def write_text(path: pathlib.Path, content: str) -> pathlib.Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")
    return path


def bench_frame(rows: Iterable[BenchRow]) -> pd.DataFrame:
    return pd.DataFrame.from_records(
        [row.model_dump(include=set(BENCH_COLUMNS)) for row in rows],
        columns=BENCH_COLUMNS,
    )


def write_bench(path: pathlib.Path, rows: Iterable[BenchRow]) -> pathlib.Path:
    return _write_frame(path, bench_frame(rows))


def query_line(query: Sequence[float], result: NNResult) -> str:
    return json.dumps(
        {
            "query": [float(query[0]), float(query[1])],
            "id": result.id,
            "distance": result.distance,
            "cells_examined": result.cells_examined,
            "candidates_compared": result.candidates_compared,
        }
    )
