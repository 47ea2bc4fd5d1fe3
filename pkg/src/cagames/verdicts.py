"""Outcome and verdict types shared by the game and analysis modules."""

from dataclasses import dataclass, field
from enum import Enum


class Outcome(Enum):
    """Normal-play outcome: P means the player to move loses."""

    P = "P"
    N = "N"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Mismatch:
    position: object
    solver: Outcome
    predicate: Outcome


@dataclass
class MismatchReport:
    """Solver-vs-predicate disagreements over a verified region."""

    entries: list = field(default_factory=list)
    checked: int = 0

    def record(self, position, solver: Outcome, predicate: Outcome) -> None:
        self.entries.append(Mismatch(position, solver, predicate))

    @property
    def ok(self) -> bool:
        return not self.entries

    def __len__(self) -> int:
        return len(self.entries)


PATH_ILLEGAL = "illegal"
PATH_NOT_N = "not-N-before-winner-move"
PATH_NOT_P = "not-P-after-winner-move"


@dataclass(frozen=True)
class PathVerdict:
    """Result of checking an alternating move path for optimality.

    The winning player is the one who makes the first move of the path.
    """

    optimal: bool
    failure_index: int | None = None
    reason: str | None = None

    @staticmethod
    def ok() -> "PathVerdict":
        return PathVerdict(optimal=True)

    @staticmethod
    def failure(index: int, reason: str) -> "PathVerdict":
        return PathVerdict(optimal=False, failure_index=index, reason=reason)


@dataclass(frozen=True)
class PeriodicityVerdict:
    """Outcome of a bounded two-dimensional periodicity search.

    ``periodic`` verdicts mean cell(x, y) == cell(x+delta, y+rho) held for
    every checked window cell with y >= onset; an unsuccessful search is
    reported as unknown-within-bounds, never as a refutation.
    """

    periodic: bool
    delta: int | None = None
    rho: int | None = None
    onset: int | None = None
    searched: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ConvergenceVerdict:
    """Window-bounded evidence for (or a witness against) agreement."""

    diverged: bool
    x: int | None = None
    y: int | None = None
    y_range: tuple | None = None
    x_window: tuple | None = None


@dataclass(frozen=True)
class PatternHit:
    x: int  # leftmost cell of the occurrence
    y: int
    reversed: bool
