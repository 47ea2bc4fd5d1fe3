"""Windowed binary cellular automata and the games that emulate them.

The engine has three legs: exact evolution of a two-parameter cellular
automaton over periodic-left / finite-center / periodic-right
backgrounds, a move-size-dynamic take-away game and a triangle-placing
game whose normal-play outcomes track the automaton's cells, and bounded
analysis tools (periodicity, convergence, pattern search) for questions
that are undecidable in full generality.
"""

from .background import (
    BackgroundSpec,
    all_ones_background,
    all_zero_background,
    background_value,
    step_background,
)
from .ca import CAParams, CASystem, SpacetimeWindow, ca_cell, evolve_window
from .specdoc import SpecDocument, parse_spec_document
from .takeaway import GamePosition, GameSpec, Move
from .triangle import TriangleMove, TrianglePosition
from .verdicts import Outcome

__version__ = "0.1.0"

__all__ = [
    "BackgroundSpec",
    "CAParams",
    "CASystem",
    "GamePosition",
    "GameSpec",
    "Move",
    "Outcome",
    "SpacetimeWindow",
    "SpecDocument",
    "TriangleMove",
    "TrianglePosition",
    "all_ones_background",
    "all_zero_background",
    "background_value",
    "ca_cell",
    "evolve_window",
    "parse_spec_document",
    "step_background",
    "__version__",
]
