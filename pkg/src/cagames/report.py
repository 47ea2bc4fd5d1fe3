"""Report rendering: matplotlib spacetime figures plus delimited grids.

This is presentation-only plumbing over the exact engine output. Figures
follow the engine's orientation convention (time upward), and the CSV
carries the same cells with explicit coordinates so the two files in a
report always describe the identical window.
"""

import csv

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.colors import ListedColormap

from .ca import SpacetimeWindow

_CELL_COLORS = ListedColormap(["#ffffff", "#c83232"])


def write_grid_csv(window: SpacetimeWindow, path: str, delimiter: str = ",") -> None:
    """Delimited dump of the window, one row per y, latest row first."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delimiter)
        writer.writerow(["y"] + [f"x{x}" for x in range(window.x0, window.x1 + 1)])
        for y in range(window.t, -1, -1):
            writer.writerow([y] + [int(v) for v in window.cells[y]])


def save_spacetime_figure(
    window: SpacetimeWindow,
    path: str,
    title: str | None = None,
    p_cells=None,
    marked_cells=None,
    dpi: int = 150,
) -> None:
    """Render the window to an image file, time flowing upward.

    ``p_cells`` are drawn as green circles (winning positions in the
    game overlays), ``marked_cells`` as blue rings (e.g. the predicate
    column of a position under study).
    """
    extent = (window.x0 - 0.5, window.x1 + 0.5, -0.5, window.t + 0.5)
    width = max(4.0, min(14.0, window.width / 8))
    height = max(3.0, min(14.0, window.height / 8))
    fig, ax = plt.subplots(figsize=(width, height))
    ax.imshow(
        window.cells,
        origin="lower",
        extent=extent,
        cmap=_CELL_COLORS,
        vmin=0,
        vmax=1,
        interpolation="none",
        aspect="auto",
    )
    if p_cells:
        ax.scatter(
            [c[0] for c in p_cells],
            [c[1] for c in p_cells],
            s=60,
            color="#1f8a1f",
            zorder=3,
            label="P positions",
        )
        ax.legend(loc="upper right", fontsize=8)
    if marked_cells:
        ax.scatter(
            [c[0] for c in marked_cells],
            [c[1] for c in marked_cells],
            s=90,
            facecolors="none",
            edgecolors="#1f4fd0",
            linewidths=1.5,
            zorder=4,
        )
    ax.set_xlabel("tape (x)")
    ax.set_ylabel("time (y)")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
