import logging
import pathlib
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from gridex.errors import AxisRangeError, LoadErrorCode, MatrixLoadError
from gridex.models import DataMatrix, ProfileKind, SupplementaryProfile, UnitCloud
from gridex.pixel_grid import rescale_unit

logger = logging.getLogger(__name__)


def _duplicates(ids: Sequence[str]) -> List[str]:
    seen: set[str] = set()
    repeated: List[str] = []
    for item in ids:
        if item in seen and item not in repeated:
            repeated.append(item)

        seen.add(item)

    return repeated


def _read_cells(path: pathlib.Path) -> pd.DataFrame:
    if not path.is_file():
        raise MatrixLoadError(LoadErrorCode.NOT_FOUND, f"input file {path} not found")

    try:
        frame = pd.read_csv(
            path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
        )

    except pd.errors.EmptyDataError:
        raise MatrixLoadError(LoadErrorCode.EMPTY, f"input file {path} is empty")

    except pd.errors.ParserError as err:
        raise MatrixLoadError(LoadErrorCode.MALFORMED, f"malformed CSV in {path}: {err}")

    if frame.shape[0] < 2 or frame.shape[1] < 2:
        raise MatrixLoadError(
            LoadErrorCode.EMPTY,
            f"input file {path} needs a header row, at least one data row and one data column",
        )

    if frame.isna().to_numpy().any():
        row = int(np.flatnonzero(frame.isna().any(axis=1).to_numpy())[0])
        raise MatrixLoadError(
            LoadErrorCode.MALFORMED,
            f"malformed CSV in {path}: line {row + 1} has too few fields",
        )

    return frame


def load_matrix(
    path: str | pathlib.Path,
    sup_rows: Sequence[str] = (),
    sup_cols: Sequence[str] = (),
) -> Tuple[DataMatrix, List[SupplementaryProfile]]:
    """Read a CSV matrix and split off supplementary rows and columns.

    The header row holds column ids after a corner cell; each following
    row starts with its row id.
    """
    path = pathlib.Path(path)
    frame = _read_cells(path)

    col_ids = [str(value).strip() for value in frame.iloc[0, 1:].tolist()]
    row_ids = [str(value).strip() for value in frame.iloc[1:, 0].tolist()]

    for label, ids in (("row", row_ids), ("column", col_ids)):
        if repeated := _duplicates(ids):
            raise MatrixLoadError(
                LoadErrorCode.DUPLICATE_ID,
                f"duplicate {label} id {repeated[0]!r} in {path}",
            )

    for label, requested, known in (("row", sup_rows, row_ids), ("column", sup_cols, col_ids)):
        unknown = [item for item in requested if item not in known]
        if unknown:
            raise MatrixLoadError(
                LoadErrorCode.UNKNOWN_SUPPLEMENTARY,
                f"unknown supplementary {label} id {unknown[0]!r}",
            )

    raw = frame.iloc[1:, 1:].reset_index(drop=True)
    raw.columns = range(raw.shape[1])
    numeric = raw.apply(lambda column: pd.to_numeric(column.str.strip(), errors="coerce"))
    values = numeric.to_numpy(dtype=np.float64)

    bad = ~np.isfinite(values)
    if bad.any():
        row, col = (int(axis[0]) for axis in np.nonzero(bad))
        raise MatrixLoadError(
            LoadErrorCode.NON_NUMERIC,
            f"non-numeric value {raw.iat[row, col]!r} at ({row_ids[row]},{col_ids[col]})",
        )

    negative = values < 0
    if negative.any():
        row, col = (int(axis[0]) for axis in np.nonzero(negative))
        raise MatrixLoadError(
            LoadErrorCode.NEGATIVE_VALUE,
            f"negative value at ({row_ids[row]},{col_ids[col]})",
        )

    active_rows = [idx for idx, row_id in enumerate(row_ids) if row_id not in sup_rows]
    active_cols = [idx for idx, col_id in enumerate(col_ids) if col_id not in sup_cols]
    if not active_rows or not active_cols:
        raise MatrixLoadError(LoadErrorCode.EMPTY, "no active rows or columns left")

    active = values[np.ix_(active_rows, active_cols)]

    row_totals = active.sum(axis=1)
    col_totals = active.sum(axis=0)
    for label, totals, positions, ids in (
        ("row", row_totals, active_rows, row_ids),
        ("column", col_totals, active_cols, col_ids),
    ):
        empty = np.flatnonzero(totals <= 0)
        if empty.size:
            raise MatrixLoadError(
                LoadErrorCode.ZERO_MARGIN,
                f"active {label} {ids[positions[int(empty[0])]]!r} has a zero total",
            )

    active.setflags(write=False)
    matrix = DataMatrix(
        row_ids=[row_ids[idx] for idx in active_rows],
        col_ids=[col_ids[idx] for idx in active_cols],
        values=active,
    )

    profiles: List[SupplementaryProfile] = []
    for row_id in sup_rows:
        position = row_ids.index(row_id)
        profiles.append(
            SupplementaryProfile(
                id=row_id,
                kind=ProfileKind.ROW,
                values=values[position, active_cols].copy(),
            )
        )

    for col_id in sup_cols:
        position = col_ids.index(col_id)
        profiles.append(
            SupplementaryProfile(
                id=col_id,
                kind=ProfileKind.COLUMN,
                values=values[active_rows, position].copy(),
            )
        )

    logger.info(
        "loaded %s: %d x %d active, %d supplementary",
        path,
        matrix.n,
        matrix.m,
        len(profiles),
    )

    return matrix, profiles


def load_coordinates(path: str | pathlib.Path) -> pd.DataFrame:
    """Read a coordinates CSV back with exact float round-tripping."""
    path = pathlib.Path(path)
    if not path.is_file():
        raise MatrixLoadError(LoadErrorCode.NOT_FOUND, f"coordinates file {path} not found")

    return pd.read_csv(
        path,
        dtype={"id": str, "kind": str},
        keep_default_na=False,
        float_precision="round_trip",
    )


def load_cloud(
    path: str | pathlib.Path,
    pair: Tuple[int, int],
    source: str = "rows",
) -> UnitCloud:
    """Rebuild the pixellated cloud from a coordinates CSV.

    `pair` is 0-based. Row order and id prefixes match `build_cloud`, so
    the result is bit-identical to the cloud the pipeline pixellated.
    """
    frame = load_coordinates(path)
    axes = [f"axis{pair[0] + 1}", f"axis{pair[1] + 1}"]
    missing = [axis for axis in axes if axis not in frame.columns]
    if missing:
        raise AxisRangeError(f"coordinates file {path} has no column {missing[0]}")

    rows = frame[frame["kind"] == "row"]
    columns = frame[frame["kind"] == "column"]

    match source:
        case "rows":
            selected = rows
            ids = rows["id"].tolist()

        case "columns":
            selected = columns
            ids = columns["id"].tolist()

        case _:
            selected = pd.concat([rows, columns])
            ids = [f"row:{item}" for item in rows["id"]] + [f"col:{item}" for item in columns["id"]]

    if selected.empty:
        raise MatrixLoadError(LoadErrorCode.EMPTY, f"coordinates file {path} has no {source} points")

    return rescale_unit(
        selected[axes].to_numpy(dtype=np.float64),
        ids,
        axis_pair=pair,
    )
