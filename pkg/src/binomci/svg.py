"""Self-contained SVG rendering for the win/lose/tie comparison grids.

No drawing library: the raster is small enough that one ``rect`` element per
grid cell, emitted through f-strings, stays fast and byte-stable.
"""

from __future__ import annotations

from typing import Sequence

from .report import VERDICT_A, VERDICT_B, VERDICT_TIE, GridCell

CELL_FILL = {VERDICT_A: "#000000", VERDICT_B: "#FFFFFF", VERDICT_TIE: "#808080"}

_WIDTH = 960.0
_HEIGHT = 640.0
_MARGIN_LEFT = 64.0
_MARGIN_RIGHT = 16.0
_MARGIN_TOP = 16.0
_MARGIN_BOTTOM = 48.0
_FONT = 'font-family="sans-serif" font-size="12"'


def _tick_indices(count: int, most: int = 6) -> list[int]:
    if count <= most:
        return list(range(count))
    return sorted({round(k * (count - 1) / (most - 1)) for k in range(most)})


def render_heatmap_svg(cells: Sequence[GridCell]) -> str:
    """An SVG raster of the comparison cells.

    Sample size n runs bottom-to-top, p left-to-right; each cell is one rect
    filled black (A wins), white (B wins) or grey (tie), and both axes carry
    tick labels plus an axis name.
    """
    if not cells:
        raise ValueError("nothing to render: no cells")
    n_values = sorted({cell.n for cell in cells})
    p_values = sorted({cell.p for cell in cells})
    row_of = {n: i for i, n in enumerate(n_values)}
    col_of = {p: j for j, p in enumerate(p_values)}
    plot_w = _WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM
    cell_w = plot_w / len(p_values)
    cell_h = plot_h / len(n_values)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH:.0f}" '
        f'height="{_HEIGHT:.0f}" viewBox="0 0 {_WIDTH:.0f} {_HEIGHT:.0f}">',
        f'<rect x="0" y="0" width="{_WIDTH:.0f}" height="{_HEIGHT:.0f}" fill="#FFFFFF"/>',
        '<g shape-rendering="crispEdges">',
    ]
    for cell in cells:
        x = _MARGIN_LEFT + col_of[cell.p] * cell_w
        y = _MARGIN_TOP + plot_h - (row_of[cell.n] + 1) * cell_h
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{cell_w:.2f}" height="{cell_h:.2f}" '
            f'fill="{CELL_FILL[cell.verdict]}"/>')
    parts.append("</g>")

    axis_y = _MARGIN_TOP + plot_h
    parts.append(
        f'<rect x="{_MARGIN_LEFT:.2f}" y="{_MARGIN_TOP:.2f}" width="{plot_w:.2f}" '
        f'height="{plot_h:.2f}" fill="none" stroke="#000000" stroke-width="1"/>')
    for j in _tick_indices(len(p_values)):
        x = _MARGIN_LEFT + (j + 0.5) * cell_w
        parts.append(f'<line x1="{x:.2f}" y1="{axis_y:.2f}" x2="{x:.2f}" '
                     f'y2="{axis_y + 5:.2f}" stroke="#000000" stroke-width="1"/>')
        parts.append(f'<text x="{x:.2f}" y="{axis_y + 18:.2f}" {_FONT} '
                     f'text-anchor="middle">{p_values[j]:.3f}</text>')
    for i in _tick_indices(len(n_values)):
        y = _MARGIN_TOP + plot_h - (i + 0.5) * cell_h
        parts.append(f'<line x1="{_MARGIN_LEFT - 5:.2f}" y1="{y:.2f}" '
                     f'x2="{_MARGIN_LEFT:.2f}" y2="{y:.2f}" stroke="#000000" stroke-width="1"/>')
        parts.append(f'<text x="{_MARGIN_LEFT - 8:.2f}" y="{y + 4:.2f}" {_FONT} '
                     f'text-anchor="end">{n_values[i]}</text>')

    label_x = _MARGIN_LEFT + plot_w / 2
    parts.append(f'<text x="{label_x:.2f}" y="{_HEIGHT - 8:.2f}" {_FONT} '
                 'text-anchor="middle">p</text>')
    label_y = _MARGIN_TOP + plot_h / 2
    parts.append(f'<text x="16" y="{label_y:.2f}" {_FONT} text-anchor="middle" '
                 f'transform="rotate(-90 16 {label_y:.2f})">n</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
