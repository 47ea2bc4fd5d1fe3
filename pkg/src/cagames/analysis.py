"""Bounded decision tools: periodicity, convergence, pattern search.

Several of the questions these answer are undecidable in general, so
everything here returns honest window-bounded verdicts: a periodicity
search that exhausts its bounds reports unknown-within-bounds rather than
"aperiodic", and a convergence scan that finds no disagreement reports
agreement *on the tested region* only. Positive findings (a period, a
divergence witness) are exact and re-checkable.
"""

import numpy as np

from .ca import CASystem, ca_cell, evolve_window, DEFAULT_CELL_BUDGET
from .errors import InsufficientWindowError, ParamsMismatchError
from .takeaway import GamePosition, GameSpec, outcome, supercritical
from .verdicts import (
    ConvergenceVerdict,
    MismatchReport,
    PatternHit,
    PeriodicityVerdict,
)


def _required_span(sys: CASystem, t_max: int) -> tuple[int, int]:
    """x-range the center word (and the left/right seam) can influence by row t_max."""
    bg = sys.background
    lo = -bg.shift - t_max * sys.params.gamma
    hi = max(len(bg.center), 1) - bg.shift + t_max * (sys.params.Gamma + 1)
    return lo, hi


def detect_periodicity(
    sys: CASystem,
    delta_max: int,
    rho_max: int,
    y_burnin: int,
    x0: int,
    x1: int,
    t_max: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> PeriodicityVerdict:
    """Search for constants (delta, rho) with cell(x,y) = cell(x+delta, y+rho).

    Candidates are tried with rho ascending, then delta ascending; the
    congruence must hold on every window cell with y in [y_burnin, t_max].
    The first success is reported with the smallest onset row y0 <= y_burnin
    from which it already holds. The window must contain the influence
    cone of the center word at the tested rows, else the search could
    certify a period the center region breaks.
    """
    if rho_max < 1:
        raise ValueError("rho_max must be >= 1")
    if y_burnin > t_max:
        raise ValueError("y_burnin must be <= t_max")
    need_lo, need_hi = _required_span(sys, t_max)
    if x0 > need_lo or x1 < need_hi:
        raise InsufficientWindowError(
            f"window [{x0},{x1}] does not contain the center influence "
            f"span [{need_lo},{need_hi}] at row {t_max}",
            required=(need_lo, need_hi),
        )
    searched = {
        "delta_max": delta_max,
        "rho_max": rho_max,
        "y_burnin": y_burnin,
        "x0": x0,
        "x1": x1,
        "t_max": t_max,
    }
    grid = evolve_window(
        sys, x0, x1 + delta_max, t_max + rho_max, cell_budget=cell_budget
    ).cells
    width = x1 - x0 + 1
    for rho in range(1, rho_max + 1):
        for delta in range(0, delta_max + 1):
            base = grid[y_burnin : t_max + 1, 0:width]
            shifted = grid[y_burnin + rho : t_max + 1 + rho, delta : delta + width]
            if not np.array_equal(base, shifted):
                continue
            onset = y_burnin
            while onset > 0 and np.array_equal(
                grid[onset - 1, 0:width], grid[onset - 1 + rho, delta : delta + width]
            ):
                onset -= 1
            return PeriodicityVerdict(
                periodic=True, delta=delta, rho=rho, onset=onset, searched=searched
            )
    return PeriodicityVerdict(periodic=False, searched=searched)


def transfer_period(delta: int, rho: int, gamma: int) -> int:
    """Game-side spatial period for a CA period (delta, rho): delta + gamma*rho.

    The time period carries over unchanged.
    """
    if rho < 1:
        raise ValueError("rho must be >= 1")
    return delta + gamma * rho


def check_game_periodicity(
    spec: GameSpec,
    delta_p: int,
    rho_p: int,
    x_max: int,
    y_max: int,
    mp_max: int,
    y_min: int = 1,
) -> MismatchReport:
    """Compare outcomes of (X,Y,mp) and (X+delta_p, Y+rho_p, mp).

    Only pairs where both positions have super-critical tape-heaps are
    compared, for Y in [y_min, y_max]; disagreements are reported.
    """
    if delta_p < 0 or rho_p < 1:
        raise ValueError("need delta_p >= 0 and rho_p >= 1")
    report = MismatchReport()
    for Y in range(y_min, y_max + 1):
        for X in range(0, x_max + 1):
            for mp in range(0, mp_max + 1):
                pos = GamePosition(X, Y, mp)
                shifted = GamePosition(X + delta_p, Y + rho_p, mp)
                if not (supercritical(spec, pos) and supercritical(spec, shifted)):
                    continue
                a = outcome(spec, pos)
                b = outcome(spec, shifted)
                report.checked += 1
                if a is not b:
                    report.record((pos, shifted), a, b)
    return report


def check_convergence(
    sys_a: CASystem,
    sys_b: CASystem,
    y_from: int,
    y_to: int,
    x0: int,
    x1: int,
) -> ConvergenceVerdict:
    """Scan rows y_from..y_to for a cell where the two systems differ.

    Each row is scanned over [x0 - y*gamma, x1 + y*(Gamma+1)] (the window
    padded by the influence cone), y ascending then x ascending; the
    first disagreement is returned as an exact witness. No witness means
    agreement on the tested region, which is evidence, not proof.
    """
    if sys_a.params != sys_b.params:
        raise ParamsMismatchError(
            f"parameter mismatch: {sys_a.params} vs {sys_b.params}"
        )
    gamma = sys_a.params.gamma
    right_reach = sys_a.params.Gamma + 1
    for y in range(y_from, y_to + 1):
        for x in range(x0 - y * gamma, x1 + y * right_reach + 1):
            if ca_cell(sys_a, x, y) != ca_cell(sys_b, x, y):
                return ConvergenceVerdict(diverged=True, x=x, y=y)
    return ConvergenceVerdict(
        diverged=False, y_range=(y_from, y_to), x_window=(x0, x1)
    )


def find_pattern(
    sys: CASystem,
    pattern: str,
    x0: int,
    x1: int,
    y_from: int = 0,
    y_to: int = 0,
    include_reversed: bool = True,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> list[PatternHit]:
    """All occurrences of a bit pattern in the evolved rows, ascending (y, x).

    With include_reversed (the default, since this family mirrors the
    textbook orientation of its most famous member) the reversed pattern
    is searched too; palindromes are reported once, as forward hits.
    """
    if not pattern or set(pattern) - {"0", "1"}:
        raise ValueError("pattern must be a non-empty string over {0,1}")
    if y_from > y_to:
        raise ValueError("y_from must be <= y_to")
    window = evolve_window(sys, x0, x1, y_to, cell_budget=cell_budget)
    targets = [(pattern, False)]
    rev = pattern[::-1]
    if include_reversed and rev != pattern:
        targets.append((rev, True))
    hits = []
    for y in range(y_from, y_to + 1):
        row = window.row_bits(y)
        row_hits = []
        for text, is_rev in targets:
            start = row.find(text)
            while start != -1:
                row_hits.append(PatternHit(x=x0 + start, y=y, reversed=is_rev))
                start = row.find(text, start + 1)
        hits.extend(sorted(row_hits, key=lambda hit: (hit.x, hit.reversed)))
    return hits
