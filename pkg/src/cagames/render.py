"""Bit-exact renderers for spacetime windows.

Both formats put the latest row (largest y) at the top, matching the
time-flows-upward orientation of the figures. Text uses '.' for 0 and '#'
for 1, one row per line. PBM is plain P1 with one digit per pixel and one
image row per line.
"""

import numpy as np

from .ca import SpacetimeWindow

FORMATS = ("text", "pbm")


def render_text(window: SpacetimeWindow) -> str:
    lines = []
    for y in range(window.t, -1, -1):
        lines.append("".join(".#"[int(v)] for v in window.cells[y]))
    return "\n".join(lines) + "\n"


def render_pbm(window: SpacetimeWindow) -> bytes:
    header = f"P1\n{window.width} {window.height}\n"
    lines = []
    for y in range(window.t, -1, -1):
        lines.append("".join(str(int(v)) for v in window.cells[y]))
    return (header + "\n".join(lines) + "\n").encode("ascii")


def render(window: SpacetimeWindow, format: str) -> bytes:
    if format == "text":
        return render_text(window).encode("ascii")
    if format == "pbm":
        return render_pbm(window)
    raise ValueError(f"unknown format {format!r} (expected one of {FORMATS})")


def parse_pbm(data: bytes) -> np.ndarray:
    """Read a plain P1 image into a top-down (H, W) uint8 array.

    Tolerant reader: comments and any whitespace layout are accepted, so
    it round-trips our own output and most external P1 writers.
    """
    text = data.decode("ascii")
    # strip comments, then tokenize; pixel digits may be unseparated
    lines = [line.split("#", 1)[0] for line in text.splitlines()]
    tokens = "\n".join(lines).split()
    if len(tokens) < 3 or tokens[0] != "P1":
        raise ValueError("not a plain PBM (P1) image")
    width = int(tokens[1])
    height = int(tokens[2])
    pixel_chars = "".join(tokens[3:])
    if len(pixel_chars) != width * height or set(pixel_chars) - {"0", "1"}:
        raise ValueError("malformed P1 pixel data")
    flat = np.frombuffer(pixel_chars.encode("ascii"), dtype=np.uint8) - ord("0")
    return flat.reshape(height, width)


def pbm_to_window(data: bytes, x0: int) -> SpacetimeWindow:
    """Rebuild a SpacetimeWindow from P1 data and its left coordinate."""
    grid = parse_pbm(data)
    height, width = grid.shape
    return SpacetimeWindow(
        x0=x0, x1=x0 + width - 1, t=height - 1, cells=np.flipud(grid).copy()
    )
