import pathlib

import numpy as np

from gridex.models import DataMatrix, UnitCloud


def random_matrix(rng: np.random.Generator, rows: int = 5, cols: int = 8) -> DataMatrix:
    while True:
        values = rng.integers(0, 10, size=(rows, cols)).astype(np.float64)
        if np.all(values.sum(axis=1) > 0) and np.all(values.sum(axis=0) > 0):
            return DataMatrix.from_rows(values.tolist())


def random_cloud(rng: np.random.Generator, n: int) -> UnitCloud:
    return UnitCloud.from_points(rng.random((n, 2)).tolist())


def write_csv(path: pathlib.Path, header: list[str], rows: list[list[object]]) -> pathlib.Path:
    lines = [",".join(header)]
    lines.extend(",".join(str(value) for value in row) for row in rows)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
