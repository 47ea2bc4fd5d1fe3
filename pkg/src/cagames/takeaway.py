"""The move-size-dynamic take-away game.

A position holds a heap of X colored tokens (the tape-heap), a heap of Y
matches (the time-heap) and the number mp of matches the opponent removed
on the previous move. Token i is black iff the background value at i is
1; token 1 is at the bottom, token X on top.

A move removes t tokens from the top and m matches, subject to

    1 <= m <= Y,
    gamma*(m-1) <= t <= gamma*m + mp + Gamma  and  t <= X,
      (exception: t = X is allowed whenever X < gamma*(m-1)),
    and, when m = Y empties the match heap, no black token may remain
    among the top min(Y, X-t) tokens after the removal.

A player with no legal move loses. The CA-side prediction for the same
position reads the column x = X - gamma*Y of the automaton: P exactly
when rows Y..Y+mp-1 of that column are all 0 and, for Y > 0, row Y-1 is
1. ``verify_predictions`` compares the two routes exhaustively.
"""

from dataclasses import dataclass, field
from functools import cached_property

from .background import BackgroundSpec, background_value, nonpositive_all_zero
from .ca import CAParams, CASystem, ca_cell
from .errors import IllegalMoveError, OutOfVerifiedDomainError
from .verdicts import (
    PATH_ILLEGAL,
    PATH_NOT_N,
    PATH_NOT_P,
    MismatchReport,
    Outcome,
    PathVerdict,
)

CLAUSE_TOKEN_RANGE = "token-range"
CLAUSE_MATCH_RANGE = "match-range"
CLAUSE_BLACK_TOKEN = "black-token"


@dataclass(frozen=True)
class GamePosition:
    X: int
    Y: int
    mp: int

    def __post_init__(self):
        if self.X < 0 or self.Y < 0 or self.mp < 0:
            raise ValueError("X, Y and mp must be non-negative")


@dataclass(frozen=True)
class Move:
    t: int
    m: int


@dataclass
class GameSpec:
    params: CAParams
    background: BackgroundSpec
    _outcomes: dict = field(default_factory=dict, repr=False)
    _tri_outcomes: dict = field(default_factory=dict, repr=False)
    _max_black: list = field(default_factory=lambda: [0], repr=False)

    @cached_property
    def ca(self) -> CASystem:
        return CASystem(params=self.params, background=self.background)

    def token_color(self, i: int) -> int:
        """Color of token i (1 = black). Defined for all i >= 1."""
        return background_value(self.background, i)

    def token_colors(self, x: int) -> str:
        """Colors of tokens 1..x, bottom to top."""
        return "".join(str(self.token_color(i)) for i in range(1, x + 1))

    def _max_black_upto(self, x: int) -> int:
        """Largest token index <= x that is black, or 0 if none."""
        mb = self._max_black
        while len(mb) <= x:
            i = len(mb)
            mb.append(i if background_value(self.background, i) else mb[-1])
        return mb[x]


def _whole_heap_ok(spec: GameSpec, remaining: int, y: int) -> bool:
    # no black token among the top min(y, remaining) tokens
    threshold = remaining - min(y, remaining)
    return spec._max_black_upto(remaining) <= threshold


def _iter_tm(spec: GameSpec, X: int, Y: int, mp: int):
    """Legal (t, m) pairs, ascending m then ascending t."""
    gamma = spec.params.gamma
    slack = mp + spec.params.Gamma
    for m in range(1, Y + 1):
        t_lo = gamma * (m - 1)
        if X < t_lo:
            # fewer tokens than the lower bound: the whole heap may go
            if m < Y or _whole_heap_ok(spec, 0, Y):
                yield X, m
            continue
        t_hi = min(gamma * m + slack, X)
        if m < Y:
            for t in range(t_lo, t_hi + 1):
                yield t, m
        else:
            for t in range(t_lo, t_hi + 1):
                if _whole_heap_ok(spec, X - t, Y):
                    yield t, m


def legal_moves(spec: GameSpec, pos: GamePosition) -> list[Move]:
    return [Move(t, m) for t, m in _iter_tm(spec, pos.X, pos.Y, pos.mp)]


def apply_move(spec: GameSpec, pos: GamePosition, move: Move) -> GamePosition:
    """Successor position, or IllegalMoveError naming the violated clause."""
    t, m = move.t, move.m
    gamma = spec.params.gamma
    if not 1 <= m <= pos.Y:
        raise IllegalMoveError(
            f"m={m} outside 1..{pos.Y}", clause=CLAUSE_MATCH_RANGE
        )
    t_lo = gamma * (m - 1)
    if pos.X < t_lo:
        if t != pos.X:
            raise IllegalMoveError(
                f"heap below gamma*(m-1): t must equal X={pos.X}",
                clause=CLAUSE_TOKEN_RANGE,
            )
    elif not t_lo <= t <= min(gamma * m + pos.mp + spec.params.Gamma, pos.X):
        raise IllegalMoveError(
            f"t={t} outside {t_lo}..{min(gamma * m + pos.mp + spec.params.Gamma, pos.X)}",
            clause=CLAUSE_TOKEN_RANGE,
        )
    if m == pos.Y and not _whole_heap_ok(spec, pos.X - t, pos.Y):
        raise IllegalMoveError(
            "a black token remains in the inspected top of the heap",
            clause=CLAUSE_BLACK_TOKEN,
        )
    return GamePosition(X=pos.X - t, Y=pos.Y - m, mp=m)


def _is_p(spec: GameSpec, X: int, Y: int, mp: int) -> bool:
    memo = spec._outcomes
    key = (X, Y, mp)
    cached = memo.get(key)
    if cached is not None:
        return cached
    result = True
    for t, m in _iter_tm(spec, X, Y, mp):
        if _is_p(spec, X - t, Y - m, m):
            result = False
            break
    memo[key] = result
    return result


def outcome(spec: GameSpec, pos: GamePosition) -> Outcome:
    """Memoized normal-play outcome (P iff every move leads to N)."""
    return Outcome.P if _is_p(spec, pos.X, pos.Y, pos.mp) else Outcome.N


def best_move(spec: GameSpec, pos: GamePosition) -> Move | None:
    """First move (ascending m, then t) to a P position; None iff pos is P."""
    for t, m in _iter_tm(spec, pos.X, pos.Y, pos.mp):
        if _is_p(spec, pos.X - t, pos.Y - m, m):
            return Move(t, m)
    return None


def predicted_outcome(spec: GameSpec, pos: GamePosition) -> Outcome:
    """Outcome read off the automaton column x = X - gamma*Y.

    P iff cell(x, Y+i) = 0 for 0 <= i < mp and, when Y > 0,
    cell(x, Y-1) = 1. Positions with Y = 0 and mp >= 1 are outside the
    verified domain (they are unreachable by legal play) and refused.
    """
    if pos.Y == 0 and pos.mp >= 1:
        raise OutOfVerifiedDomainError(
            "prediction undefined for Y=0 with mp>=1", position=pos
        )
    x = pos.X - spec.params.gamma * pos.Y
    sys = spec.ca
    for i in range(pos.mp):
        if ca_cell(sys, x, pos.Y + i) != 0:
            return Outcome.N
    if pos.Y > 0 and ca_cell(sys, x, pos.Y - 1) != 1:
        return Outcome.N
    return Outcome.P


def supercritical(spec: GameSpec, pos: GamePosition) -> bool:
    """X >= (Gamma+gamma+1)*Y + mp: the coloring alone decides the game."""
    p = spec.params
    return pos.X >= (p.Gamma + p.gamma + 1) * pos.Y + pos.mp


def verify_predictions(
    spec: GameSpec,
    x_max: int,
    y_max: int,
    mp_max: int,
    mp_min: int = 1,
    _predicate=None,
) -> MismatchReport:
    """Exhaustively compare the solver with the CA prediction.

    For backgrounds that are 0 at every non-positive position the whole
    box X <= x_max, 1 <= Y <= y_max, mp_min <= mp <= mp_max is covered
    (plus the (X, 0, 0) terminals); otherwise only super-critical
    positions, where the prediction is background-independent.

    mp_min defaults to 1: mp counts matches removed by a real previous
    move, and the vacuous-column reading of mp = 0 provably disagrees
    with the solver outside window-size-one parameter choices (from
    (X, 1, 0) every legal move empties the match heap onto a terminal P,
    so P requires the whole inspected token run to be black, not a single
    cell). Pass mp_min=0 to include the mp = 0 slice where it does hold.
    """
    predicate = _predicate or predicted_outcome
    full_domain = nonpositive_all_zero(spec.background)
    report = MismatchReport()
    for Y in range(0, y_max + 1):
        mp_range = (0,) if Y == 0 else range(mp_min, mp_max + 1)
        for X in range(0, x_max + 1):
            for mp in mp_range:
                pos = GamePosition(X, Y, mp)
                if not full_domain and not supercritical(spec, pos):
                    continue
                solved = outcome(spec, pos)
                predicted = predicate(spec, pos)
                report.checked += 1
                if solved is not predicted:
                    report.record(pos, solved, predicted)
    return report


def verify_path(spec: GameSpec, start: GamePosition, path) -> PathVerdict:
    """Check an alternating move path for optimality.

    The player making ``path[0]`` is taken to be the winning player:
    every position they face must be N, each of their moves must land on
    a P position, and every move (either player's) must be legal.
    """
    pos = start
    for i, move in enumerate(path):
        winner_to_move = i % 2 == 0
        try:
            nxt = apply_move(spec, pos, move)
        except IllegalMoveError:
            return PathVerdict.failure(i, PATH_ILLEGAL)
        if winner_to_move:
            if outcome(spec, pos) is not Outcome.N:
                return PathVerdict.failure(i, PATH_NOT_N)
            if outcome(spec, nxt) is not Outcome.P:
                return PathVerdict.failure(i, PATH_NOT_P)
        pos = nxt
    return PathVerdict.ok()
