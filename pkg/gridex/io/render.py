from typing import List, Sequence
from xml.sax.saxutils import escape

import numpy as np

from gridex.errors import GridRangeError
from gridex.models import (
    CellAnnotation,
    GridHistogram,
    Marker,
    RenderMode,
    RenderSpec,
    SupplementaryPoint,
    UnitCloud,
)
from gridex.pixel_grid import assign_cell, rescale_with

SVG_SIZE = 400
SVG_MARGIN = 20


def place_markers(
    hist: GridHistogram,
    cloud: UnitCloud,
    points: Sequence[SupplementaryPoint],
) -> List[Marker]:
    """Cells of supplementary points in the cloud's unit frame, clamped to the grid."""
    if not points:
        return []

    first, second = cloud.axis_pair
    factor_coords = np.array(
        [[point.coordinates[first], point.coordinates[second]] for point in points],
        dtype=np.float64,
    )
    unit = np.clip(rescale_with(cloud, factor_coords), 0.0, 1.0)

    return [
        Marker(
            label=point.id,
            cell=assign_cell(
                (float(u), float(v)),
                hist.base,
                hist.boundaries_x,
                hist.boundaries_y,
            ),
        )
        for point, (u, v) in zip(points, unit.tolist())
    ]


def _check_markers(hist: GridHistogram, markers: Sequence[Marker]) -> None:
    for marker in markers:
        i, j = marker.cell
        if not (0 <= i < hist.base and 0 <= j < hist.base):
            raise GridRangeError(f"marker {marker.label} at {marker.cell} outside {hist.base}x{hist.base} grid")


def render_text(
    hist: GridHistogram,
    markers: Sequence[Marker] = (),
    annotation: CellAnnotation = CellAnnotation.BLANK_ZERO,
) -> str:
    """Counts as a text grid, y increasing upward, markers listed after."""
    _check_markers(hist, markers)

    tokens = [
        [
            "." if annotation == CellAnnotation.BLANK_ZERO and hist.counts[i, j] == 0
            else str(int(hist.counts[i, j]))
            for i in range(hist.base)
        ]
        for j in reversed(range(hist.base))
    ]
    width = max(len(token) for line in tokens for token in line)

    lines = [" ".join(token.rjust(width) for token in line) for line in tokens]
    lines.extend(f"{marker.label}@({marker.cell[0]},{marker.cell[1]})" for marker in markers)

    return "\n".join(lines) + "\n"


def _gray(count: int, max_count: int) -> str:
    level = 255 - int(round(255 * count / max_count)) if max_count else 255
    return f"#{level:02x}{level:02x}{level:02x}"


def render_svg(hist: GridHistogram, markers: Sequence[Marker] = ()) -> str:
    _check_markers(hist, markers)

    max_count = hist.max_count

    def x_at(edge: float) -> float:
        return round(SVG_MARGIN + edge * SVG_SIZE, 3)

    def y_at(edge: float) -> float:
        return round(SVG_MARGIN + (1.0 - edge) * SVG_SIZE, 3)

    extent = SVG_SIZE + 2 * SVG_MARGIN
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{extent}" height="{extent}" '
        f'viewBox="0 0 {extent} {extent}">',
        f"<!-- {hist.base}x{hist.base} grid; linear grayscale fill = 1 - count / {max_count} -->",
    ]

    for i in range(hist.base):
        for j in range(hist.base):
            left, right = x_at(hist.boundaries_x[i]), x_at(hist.boundaries_x[i + 1])
            top, bottom = y_at(hist.boundaries_y[j + 1]), y_at(hist.boundaries_y[j])
            count = int(hist.counts[i, j])
            parts.append(
                f'<rect x="{left}" y="{top}" width="{round(right - left, 3)}" '
                f'height="{round(bottom - top, 3)}" fill="{_gray(count, max_count)}">'
                f"<title>({i},{j}) {count}</title></rect>"
            )

    for edge in hist.boundaries_x:
        parts.append(
            f'<line x1="{x_at(edge)}" y1="{y_at(1.0)}" x2="{x_at(edge)}" y2="{y_at(0.0)}" '
            'stroke="#888888" stroke-width="1"/>'
        )

    for edge in hist.boundaries_y:
        parts.append(
            f'<line x1="{x_at(0.0)}" y1="{y_at(edge)}" x2="{x_at(1.0)}" y2="{y_at(edge)}" '
            'stroke="#888888" stroke-width="1"/>'
        )

    for marker in markers:
        i, j = marker.cell
        center_x = round((x_at(hist.boundaries_x[i]) + x_at(hist.boundaries_x[i + 1])) / 2, 3)
        center_y = round((y_at(hist.boundaries_y[j]) + y_at(hist.boundaries_y[j + 1])) / 2, 3)
        parts.append(
            f'<text x="{center_x}" y="{center_y}" text-anchor="middle" '
            f'dominant-baseline="middle" fill="#d62728" font-size="12">{escape(marker.label)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(hist: GridHistogram, spec: RenderSpec) -> str:
    match spec.mode:
        case RenderMode.SVG:
            return render_svg(hist, spec.markers)

        case _:
            return render_text(hist, spec.markers, spec.annotation)
