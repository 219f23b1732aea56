"""Minimal hand-rolled SVG output for loss curves and decision grids.

No plotting dependency: charts are plain rects, polylines and text.
Output is a pure function of the data, so files are byte-identical
across runs.
"""

from __future__ import annotations

from typing import Sequence

CLASS_COLORS = ("#aecbe8", "#f2b8a0")
POINT_COLORS = ("#1f5fa6", "#c83c1c")
CURVE_COLORS = ("#1f5fa6", "#e07b28", "#3f9b4f", "#8452a1")


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def line_chart(
    series: Sequence[tuple[str, Sequence[float]]],
    title: str,
    x_label: str,
    y_label: str,
    width: int = 900,
    height: int = 480,
) -> str:
    """Polyline chart of one or more y-series indexed from 1."""
    margin = 60
    inner_w = width - 2 * margin
    inner_h = height - 2 * margin
    max_x = max((len(ys) for _, ys in series), default=1) or 1
    max_y = max((max(ys) for _, ys in series if ys), default=1.0) or 1.0

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2}" y="24" text-anchor="middle" font-size="16" '
        f'font-family="sans-serif">{title}</text>',
    ]
    # axes
    x0, y0 = margin, height - margin
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{width - margin}" y2="{y0}" stroke="black"/>'
    )
    parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{margin}" stroke="black"/>')
    parts.append(
        f'<text x="{width / 2}" y="{height - 16}" text-anchor="middle" '
        f'font-size="12" font-family="sans-serif">{x_label}</text>'
    )
    parts.append(
        f'<text x="18" y="{height / 2}" text-anchor="middle" font-size="12" '
        f'font-family="sans-serif" transform="rotate(-90 18 {height / 2})">{y_label}</text>'
    )
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        gy = y0 - frac * inner_h
        gx = x0 + frac * inner_w
        parts.append(
            f'<text x="{x0 - 6}" y="{_fmt(gy + 4)}" text-anchor="end" font-size="10" '
            f'font-family="sans-serif">{_fmt(frac * max_y)}</text>'
        )
        parts.append(
            f'<text x="{_fmt(gx)}" y="{y0 + 16}" text-anchor="middle" font-size="10" '
            f'font-family="sans-serif">{int(round(frac * max_x))}</text>'
        )

    for idx, (label, ys) in enumerate(series):
        color = CURVE_COLORS[idx % len(CURVE_COLORS)]
        if ys:
            pts = " ".join(
                f"{_fmt(x0 + (k + 1) / max_x * inner_w)},{_fmt(y0 - y / max_y * inner_h)}"
                for k, y in enumerate(ys)
            )
            parts.append(
                f'<polyline fill="none" stroke="{color}" stroke-width="1" points="{pts}"/>'
            )
        ly = margin + 18 * idx
        parts.append(
            f'<rect x="{width - margin - 130}" y="{ly}" width="12" height="12" fill="{color}"/>'
        )
        parts.append(
            f'<text x="{width - margin - 112}" y="{ly + 10}" font-size="12" '
            f'font-family="sans-serif">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def boundary_chart(
    cells: Sequence[Sequence[int]],
    points: Sequence[tuple[float, float, int]],
    title: str,
    size: int = 520,
) -> str:
    """Decision-grid heatmap with the dataset scattered on top.

    ``cells[i][j]`` is the class at x=(i+.5)/r, y=(j+.5)/r; the y axis
    points up.
    """
    margin = 40
    inner = size - 2 * margin
    r = len(cells)
    cell = inner / r
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<text x="{size / 2}" y="22" text-anchor="middle" font-size="15" '
        f'font-family="sans-serif">{title}</text>',
    ]
    for i in range(r):
        for j in range(r):
            color = CLASS_COLORS[cells[i][j] % 2]
            px = margin + i * cell
            py = size - margin - (j + 1) * cell
            parts.append(
                f'<rect x="{_fmt(px)}" y="{_fmt(py)}" width="{_fmt(cell + 0.5)}" '
                f'height="{_fmt(cell + 0.5)}" fill="{color}"/>'
            )
    for x, y, label in points:
        px = margin + x * inner
        py = size - margin - y * inner
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="2.5" '
            f'fill="{POINT_COLORS[label % 2]}"/>'
        )
    parts.append(
        f'<rect x="{margin}" y="{margin}" width="{inner}" height="{inner}" '
        f'fill="none" stroke="black"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
