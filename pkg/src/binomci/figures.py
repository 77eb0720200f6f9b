"""Optional matplotlib renderings of the curve and comparison reports.

matplotlib is imported lazily with the Agg backend so the rest of the package
works headless and without the dependency loaded.
"""

from __future__ import annotations

import os
import tempfile
from typing import Sequence

from .report import VERDICT_A, VERDICT_B, GridCell


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save_atomic(fig, path: str | os.PathLike) -> None:
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fmt = os.path.splitext(path)[1].lstrip(".").lower() or "png"
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="." + fmt)
    os.close(fd)
    try:
        fig.savefig(tmp_path, format=fmt, dpi=150)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def render_curves_figure(path: str | os.PathLike,
                         rows: Sequence[tuple[str, int, float, float, float]],
                         alpha: float) -> None:
    """Coverage and expected length against p, one line per (method, n)."""
    plt = _pyplot()
    series: dict[tuple[str, int], tuple[list, list, list]] = {}
    for method, n, p, cov, length in rows:
        ps, cs, ls = series.setdefault((method, n), ([], [], []))
        ps.append(p)
        cs.append(cov)
        ls.append(length)
    fig, (ax_cov, ax_len) = plt.subplots(2, 1, figsize=(8.0, 8.0), sharex=True)
    for (method, n), (ps, cs, ls) in series.items():
        label = f"{method} n={n}"
        ax_cov.plot(ps, cs, linewidth=1.0, label=label)
        ax_len.plot(ps, ls, linewidth=1.0, label=label)
    ax_cov.axhline(1.0 - alpha, color="0.4", linewidth=0.8, linestyle="--")
    ax_cov.set_ylabel("coverage")
    ax_len.set_ylabel("expected length")
    ax_len.set_xlabel("p")
    ax_cov.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    try:
        _save_atomic(fig, path)
    finally:
        plt.close(fig)


def render_heatmap_figure(path: str | os.PathLike, cells: Sequence[GridCell]) -> None:
    """The comparison raster with the same black/white/grey color code as the SVG."""
    import numpy as np
    from matplotlib.colors import ListedColormap

    plt = _pyplot()
    n_values = sorted({c.n for c in cells})
    p_values = sorted({c.p for c in cells})
    row_of = {n: i for i, n in enumerate(n_values)}
    col_of = {p: j for j, p in enumerate(p_values)}
    code = np.full((len(n_values), len(p_values)), 2.0)
    for cell in cells:
        if cell.verdict == VERDICT_A:
            code[row_of[cell.n], col_of[cell.p]] = 0.0
        elif cell.verdict == VERDICT_B:
            code[row_of[cell.n], col_of[cell.p]] = 1.0
    fig, ax = plt.subplots(figsize=(8.0, 6.0))
    ax.imshow(code, cmap=ListedColormap(["#000000", "#FFFFFF", "#808080"]),
              vmin=-0.5, vmax=2.5, origin="lower", aspect="auto",
              interpolation="nearest",
              extent=(p_values[0], p_values[-1], n_values[0], n_values[-1]))
    ax.set_xlabel("p")
    ax.set_ylabel("n")
    fig.tight_layout()
    try:
        _save_atomic(fig, path)
    finally:
        plt.close(fig)
