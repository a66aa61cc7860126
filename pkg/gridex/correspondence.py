import logging
from typing import Tuple

import numpy as np

from .constants import DEFAULT_AXES, ZERO_EIGENVALUE
from .errors import AxisRangeError, ProfileError
from .models import (
    DataMatrix,
    FactorMap,
    ProfileKind,
    SupplementaryPoint,
    SupplementaryProfile,
)

logger = logging.getLogger(__name__)


def default_axes(matrix: DataMatrix) -> int:
    return min(DEFAULT_AXES, min(matrix.n, matrix.m) - 1)


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array, dtype=np.float64)
    array.setflags(write=False)
    return array


def _margins(matrix: DataMatrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    correspondence = matrix.values / matrix.total
    return correspondence, correspondence.sum(axis=1), correspondence.sum(axis=0)


def total_inertia_oracle(matrix: DataMatrix) -> float:
    """Chi-square over grand total, computed cell by cell without factorising."""
    correspondence, row_masses, col_masses = _margins(matrix)
    expected = np.outer(row_masses, col_masses)
    return float((((correspondence - expected) ** 2) / expected).sum())


def build_correspondence_map(matrix: DataMatrix, k: int) -> FactorMap:
    """Correspondence analysis of `matrix`, retaining `k` principal axes.

    The eigen-decomposition runs on the cross-product of the standardized
    residuals taken over the smaller dimension, so its cost is cubic in
    min(n, m) only.
    """
    max_axes = min(matrix.n, matrix.m) - 1
    if k < 1 or k > max_axes:
        raise AxisRangeError(f"retained axes k={k} outside 1..{max_axes}")

    correspondence, row_masses, col_masses = _margins(matrix)
    row_scale = np.sqrt(row_masses)
    col_scale = np.sqrt(col_masses)

    residuals = (correspondence - np.outer(row_masses, col_masses)) / np.outer(
        row_scale, col_scale
    )
    total_inertia = float((residuals**2).sum())

    rows_are_smaller = matrix.n < matrix.m
    if rows_are_smaller:
        cross_product = residuals @ residuals.T

    else:
        cross_product = residuals.T @ residuals

    eigenvalues, eigenvectors = np.linalg.eigh(cross_product)
    order = np.argsort(eigenvalues, kind="stable")[::-1][:k]
    eigenvalues = np.clip(eigenvalues[order], 0.0, None)
    eigenvectors = eigenvectors[:, order]

    live = eigenvalues >= ZERO_EIGENVALUE
    eigenvalues = np.where(live, eigenvalues, 0.0)
    singular_values = np.sqrt(eigenvalues)

    if rows_are_smaller:
        row_coords = (eigenvectors / row_scale[:, None]) * singular_values
        col_coords = (residuals.T @ eigenvectors) / col_scale[:, None]

    else:
        col_coords = (eigenvectors / col_scale[:, None]) * singular_values
        row_coords = (residuals @ eigenvectors) / row_scale[:, None]

    row_coords[:, ~live] = 0.0
    col_coords[:, ~live] = 0.0

    # first nonzero row coordinate on every axis is positive
    for axis in range(k):
        nonzero = np.flatnonzero(np.abs(row_coords[:, axis]) > ZERO_EIGENVALUE)
        if nonzero.size and row_coords[nonzero[0], axis] < 0:
            row_coords[:, axis] *= -1.0
            col_coords[:, axis] *= -1.0

    logger.debug(
        "correspondence map %dx%d: eigenvalues %s of total inertia %.6g",
        matrix.n,
        matrix.m,
        np.array2string(eigenvalues, precision=6),
        total_inertia,
    )

    return FactorMap(
        row_ids=list(matrix.row_ids),
        col_ids=list(matrix.col_ids),
        row_masses=_frozen(row_masses),
        col_masses=_frozen(col_masses),
        eigenvalues=_frozen(eigenvalues),
        row_coords=_frozen(row_coords),
        col_coords=_frozen(col_coords),
        total_inertia=total_inertia,
    )


def project_supplementary(
    factor_map: FactorMap,
    profile: SupplementaryProfile,
) -> np.ndarray:
    """Place a supplementary row or column with the transition formula.

    A row-like profile is averaged over the column coordinates (and a
    column-like one over the row coordinates), then divided by the square
    root of each eigenvalue. Axes with a zero eigenvalue give 0.
    """
    opposite = factor_map.coords_for(
        ProfileKind.COLUMN if profile.kind == ProfileKind.ROW else ProfileKind.ROW
    )

    if profile.values.shape[0] != opposite.shape[0]:
        raise ProfileError(
            f"profile {profile.id} has {profile.values.shape[0]} values, "
            f"expected {opposite.shape[0]}"
        )

    total = profile.total
    if total <= 0:
        raise ProfileError(f"profile {profile.id} is all zero")

    barycenter = (profile.values / total) @ opposite
    live = factor_map.eigenvalues >= ZERO_EIGENVALUE
    scale = np.where(live, np.sqrt(np.where(live, factor_map.eigenvalues, 1.0)), 1.0)

    return np.where(live, barycenter / scale, 0.0)


def project_all(
    factor_map: FactorMap,
    profiles: list[SupplementaryProfile],
) -> list[SupplementaryPoint]:
    return [
        SupplementaryPoint(
            id=profile.id,
            kind=profile.kind,
            coordinates=tuple(
                float(value) for value in project_supplementary(factor_map, profile)
            ),
        )
        for profile in profiles
    ]
