"""The two-parameter windowed cellular automaton.

A system is a background row (y=0) plus two non-negative integers gamma
and Gamma. For y > 0 the update reads the previous row's window
x-Gamma-1 .. x+gamma (Gamma+gamma+2 cells) and sets

    cell(x, y) = 0   if cell(x-1, y-1) = cell(x, y-1) = 0,
                 0   if the whole window is 1,
                 1   otherwise.

The second index of the first condition is the *center* cell x: that is
the reading under which gamma = Gamma = 0 collapses to the XOR of the
left and center parents (Wolfram rule 60). A consequence worth knowing:
the (gamma=1, Gamma=0) system is Wolfram code 124, the left-right mirror
image of rule 110, so every known rule-110 behavior appears here
reflected.

Coordinates are absolute integers; time flows upward (larger y is later,
and renderers put the largest y at the top). A cell's value depends only
on background positions [x - y*(Gamma+1), x + y*gamma]; the windowed
evolution computes a base row widened by exactly that cone, which makes
it exact, not an approximation.
"""

from dataclasses import dataclass, field

import numpy as np

from .background import BackgroundSpec, background_value
from .errors import TableTooLargeError, WindowTooLargeError

DEFAULT_CELL_BUDGET = 10**7
MAX_TABLE_WINDOW_BITS = 20


@dataclass(frozen=True)
class CAParams:
    gamma: int
    Gamma: int

    def __post_init__(self):
        if self.gamma < 0 or self.Gamma < 0:
            raise ValueError("gamma and Gamma must be non-negative")

    @property
    def window_len(self) -> int:
        return self.Gamma + self.gamma + 2


@dataclass
class CASystem:
    params: CAParams
    background: BackgroundSpec
    _memo: dict = field(default_factory=dict, repr=False)


def ca_cell(sys: CASystem, x: int, y: int) -> int:
    """Exact value of cell (x, y); y must be >= 0. Memoized per system."""
    if y < 0:
        raise ValueError("y must be non-negative")
    memo = sys._memo
    key = (x, y)
    if key in memo:
        return memo[key]
    gamma = sys.params.gamma
    left_reach = sys.params.Gamma + 1
    bg = sys.background
    # explicit work stack: the dependency chain is y deep, which can
    # exceed Python's recursion limit for tall queries
    stack = [key]
    while stack:
        cx, cy = stack[-1]
        if (cx, cy) in memo:
            stack.pop()
            continue
        if cy == 0:
            memo[(cx, cy)] = background_value(bg, cx)
            stack.pop()
            continue
        py = cy - 1
        lo = cx - left_reach
        hi = cx + gamma
        missing = [(px, py) for px in range(lo, hi + 1) if (px, py) not in memo]
        if missing:
            stack.extend(missing)
            continue
        if memo[(cx - 1, py)] == 0 and memo[(cx, py)] == 0:
            v = 0
        elif all(memo[(px, py)] == 1 for px in range(lo, hi + 1)):
            v = 0
        else:
            v = 1
        memo[(cx, cy)] = v
        stack.pop()
    return memo[key]


@dataclass(frozen=True)
class SpacetimeWindow:
    x0: int
    x1: int
    t: int
    cells: np.ndarray  # shape (t+1, x1-x0+1), row index = y

    def cell(self, x: int, y: int) -> int:
        return int(self.cells[y, x - self.x0])

    def row_bits(self, y: int) -> str:
        return "".join(str(int(v)) for v in self.cells[y])

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1

    @property
    def height(self) -> int:
        return self.t + 1


def evolve_window(
    sys: CASystem,
    x0: int,
    x1: int,
    rows: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> SpacetimeWindow:
    """Evolve rows 0..rows over x0..x1, exactly.

    The base row is widened to [x0 - rows*(Gamma+1), x1 + rows*gamma] and
    each row is computed from the previous with a vectorized pass; the
    shrinking margins cover every dependency, so the returned cells equal
    ca_cell pointwise.
    """
    if x0 > x1:
        raise ValueError("x0 must be <= x1")
    if rows < 0:
        raise ValueError("rows must be non-negative")
    gamma = sys.params.gamma
    left_reach = sys.params.Gamma + 1
    w = sys.params.window_len
    base_lo = x0 - rows * left_reach
    base_hi = x1 + rows * gamma
    base_width = base_hi - base_lo + 1
    total = base_width * (rows + 1)
    if total > cell_budget:
        raise WindowTooLargeError(
            f"window needs {total} cells, budget is {cell_budget}",
            cells=total,
            budget=cell_budget,
        )
    bg = sys.background
    row = np.fromiter(
        (background_value(bg, x) for x in range(base_lo, base_hi + 1)),
        dtype=np.uint8,
        count=base_width,
    )
    out = np.empty((rows + 1, x1 - x0 + 1), dtype=np.uint8)
    lo = base_lo
    out[0] = row[x0 - lo : x1 - lo + 1]
    for y in range(1, rows + 1):
        csum = np.concatenate(([0], np.cumsum(row, dtype=np.int64)))
        all_ones = (csum[w:] - csum[:-w]) == w
        n = all_ones.shape[0]
        pair_zero = (row[left_reach - 1 : left_reach - 1 + n] == 0) & (
            row[left_reach : left_reach + n] == 0
        )
        row = np.where(pair_zero | all_ones, 0, 1).astype(np.uint8)
        lo += left_reach
        out[y] = row[x0 - lo : x1 - lo + 1]
    return SpacetimeWindow(x0=x0, x1=x1, t=rows, cells=out)


@dataclass(frozen=True)
class LocalRuleTable:
    """Outputs for every neighborhood of length Gamma+gamma+2.

    Neighborhoods are read left to right (position x-Gamma-1 first) and
    indexed as binary numbers with the leftmost cell most significant.
    """

    window_len: int
    outputs: tuple

    def output(self, neighborhood) -> int:
        idx = 0
        for b in neighborhood:
            idx = (idx << 1) | int(b)
        return self.outputs[idx]


def local_rule_table(
    params: CAParams, max_window_bits: int = MAX_TABLE_WINDOW_BITS
) -> LocalRuleTable:
    w = params.window_len
    if w > max_window_bits:
        raise TableTooLargeError(
            f"rule table over {w}-bit windows exceeds the {max_window_bits}-bit cap",
            window_bits=w,
            cap=max_window_bits,
        )
    left_idx = params.Gamma       # bit position of x-1 within the window
    center_idx = params.Gamma + 1
    all_ones = (1 << w) - 1
    outputs = []
    for n in range(1 << w):
        left = (n >> (w - 1 - left_idx)) & 1
        center = (n >> (w - 1 - center_idx)) & 1
        zero = (left == 0 and center == 0) or n == all_ones
        outputs.append(0 if zero else 1)
    return LocalRuleTable(window_len=w, outputs=tuple(outputs))


def wolfram_code(params: CAParams, max_window_bits: int = MAX_TABLE_WINDOW_BITS) -> int:
    """The rule embedded in the minimal symmetric neighborhood, as a Wolfram code.

    The neighborhood radius is max(Gamma+1, gamma); cells outside the
    asymmetric window are don't-cares. For (0,0) this gives 60 and for
    (1,0) it gives 124 (the mirror of rule 110).
    """
    r = max(params.Gamma + 1, params.gamma)
    size = 2 * r + 1
    if size > max_window_bits:
        raise TableTooLargeError(
            f"symmetric neighborhood of {size} bits exceeds the {max_window_bits}-bit cap",
            window_bits=size,
            cap=max_window_bits,
        )
    table = local_rule_table(params, max_window_bits=max_window_bits)
    code = 0
    for v in range(1 << size):
        # neighborhood cells x-r .. x+r, leftmost most significant
        cells = [(v >> (size - 1 - k)) & 1 for k in range(size)]
        window = cells[r - params.Gamma - 1 : r + params.gamma + 1]
        if table.output(window):
            code |= 1 << v
    return code
