"""The triangle-placing game over the same automaton family.

A position (x, y, h) is a placed triangle: top at (x, y+h), base row y,
base-sensor covering row y-1 from x-(Gamma+1+h) to x+gamma, and an
isosceles right sensor whose base covers (x-h, y)..(x, y). The next
triangle's top must land on the previous base-sensor: x' in that span,
y' + h' = y - 1, with any height h' in [0, y-1] (heights including the
single-cell triangle; the winning-strategy construction requires h' = 0
placements at every y >= 1). A placement with base row 0 is legal only
when the automaton's initial row is 0 across the new sensor base
(x'-h' .. x'). No moves exist from y = 0.

The CA-side prediction: (x, y, h) is P exactly when cells (x-h..x, y) are
all 0 and, for y > 0, the whole base-sensor row is 1.
"""

from dataclasses import dataclass

from .ca import ca_cell
from .errors import IllegalPlacementError
from .takeaway import GameSpec
from .verdicts import MismatchReport, Outcome

CLAUSE_TOP_RANGE = "top-range"
CLAUSE_HEIGHT_RANGE = "height-range"
CLAUSE_TERMINAL_ONES = "terminal-ones"
CLAUSE_TERMINAL = "no-moves-from-row-zero"


@dataclass(frozen=True)
class TrianglePosition:
    x: int
    y: int
    h: int

    def __post_init__(self):
        if self.y < 0 or self.h < 0:
            raise ValueError("y and h must be non-negative")


@dataclass(frozen=True)
class TriangleMove:
    x: int  # column of the new top
    h: int  # new height


def base_sensor_span(spec: GameSpec, pos: TrianglePosition) -> tuple[int, int]:
    """Inclusive x-range of the base-sensor (at row y-1)."""
    return pos.x - (spec.params.Gamma + 1 + pos.h), pos.x + spec.params.gamma


def _heights(pos: TrianglePosition):
    # single-cell placements (h' = 0) are legal at every y >= 1; the
    # winning-strategy construction needs them whenever the only clear
    # cell in a base-sensor carries a lone zero column above it
    yield from range(0, pos.y)


def _row_zero_clear(spec: GameSpec, x: int, h: int) -> bool:
    sys = spec.ca
    return all(ca_cell(sys, x - j, 0) == 0 for j in range(h + 1))


def legal_moves(spec: GameSpec, pos: TrianglePosition) -> list[TriangleMove]:
    """All legal placements, ascending h then x."""
    if pos.y == 0:
        return []
    lo, hi = base_sensor_span(spec, pos)
    moves = []
    for h in _heights(pos):
        landing_row = pos.y - 1 - h
        for x in range(lo, hi + 1):
            if landing_row == 0 and not _row_zero_clear(spec, x, h):
                continue
            moves.append(TriangleMove(x=x, h=h))
    return moves


def apply_move(
    spec: GameSpec, pos: TrianglePosition, move: TriangleMove
) -> TrianglePosition:
    if pos.y == 0:
        raise IllegalPlacementError(
            "no placement is possible from base row 0", clause=CLAUSE_TERMINAL
        )
    lo, hi = base_sensor_span(spec, pos)
    if not lo <= move.x <= hi:
        raise IllegalPlacementError(
            f"top x={move.x} outside base-sensor {lo}..{hi}",
            clause=CLAUSE_TOP_RANGE,
        )
    if move.h not in set(_heights(pos)):
        raise IllegalPlacementError(
            f"height {move.h} not allowed from y={pos.y}",
            clause=CLAUSE_HEIGHT_RANGE,
        )
    landing_row = pos.y - 1 - move.h
    if landing_row == 0 and not _row_zero_clear(spec, move.x, move.h):
        raise IllegalPlacementError(
            "sensor base at row 0 covers a 1", clause=CLAUSE_TERMINAL_ONES
        )
    return TrianglePosition(x=move.x, y=landing_row, h=move.h)


def _is_p(spec: GameSpec, x: int, y: int, h: int) -> bool:
    memo = spec._tri_outcomes
    key = (x, y, h)
    cached = memo.get(key)
    if cached is not None:
        return cached
    result = True
    if y > 0:
        lo = x - (spec.params.Gamma + 1 + h)
        hi = x + spec.params.gamma
        for nh in range(0, y):
            landing_row = y - 1 - nh
            for nx in range(lo, hi + 1):
                if landing_row == 0 and not _row_zero_clear(spec, nx, nh):
                    continue
                if _is_p(spec, nx, landing_row, nh):
                    result = False
                    break
            if not result:
                break
    memo[key] = result
    return result


def outcome(spec: GameSpec, pos: TrianglePosition) -> Outcome:
    """Memoized normal-play outcome over placements."""
    return Outcome.P if _is_p(spec, pos.x, pos.y, pos.h) else Outcome.N


def predicted_outcome(spec: GameSpec, pos: TrianglePosition) -> Outcome:
    """Outcome read off the automaton's sensor cells."""
    sys = spec.ca
    for j in range(pos.h + 1):
        if ca_cell(sys, pos.x - j, pos.y) != 0:
            return Outcome.N
    if pos.y > 0:
        lo, hi = base_sensor_span(spec, pos)
        for k in range(lo, hi + 1):
            if ca_cell(sys, k, pos.y - 1) != 1:
                return Outcome.N
    return Outcome.P


def verify_predictions(
    spec: GameSpec,
    x_min: int,
    x_max: int,
    y_max: int,
    h_max: int,
    _predicate=None,
) -> MismatchReport:
    """Exhaustively compare the placement solver with the CA prediction.

    Base-row-0 positions whose sensor base covers a 1 are skipped: they
    can never be legally placed, and normal play scores any moveless
    position P regardless of the board under it.
    """
    predicate = _predicate or predicted_outcome
    report = MismatchReport()
    for y in range(0, y_max + 1):
        for x in range(x_min, x_max + 1):
            for h in range(0, h_max + 1):
                if y == 0 and not _row_zero_clear(spec, x, h):
                    continue
                pos = TrianglePosition(x, y, h)
                solved = outcome(spec, pos)
                predicted = predicate(spec, pos)
                report.checked += 1
                if solved is not predicted:
                    report.record(pos, solved, predicted)
    return report
