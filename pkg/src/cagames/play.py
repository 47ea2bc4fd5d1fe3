"""Line-oriented human-vs-engine play for the take-away game.

The engine always answers with the winning move when one exists and with
the first legal move otherwise. Human input is one move per line as
"t m" (tokens then matches); only moves from the legal list are
accepted. The finished transcript is printed in path-check syntax so a
session can be re-verified.
"""

import sys

from . import takeaway
from .takeaway import GamePosition, GameSpec, Move


def _show_position(spec: GameSpec, pos: GamePosition) -> None:
    colors = spec.token_colors(pos.X)
    stack = colors[::-1] if colors else "(empty)"
    print(f"position: X={pos.X} Y={pos.Y} mp={pos.mp}")
    print(f"tokens (top to bottom, 1=black): {stack}")


def _read_move(legal: list[Move], stdin) -> Move | None:
    """Prompt until a legal move or EOF."""
    while True:
        print("your move (t m): ", end="", flush=True)
        line = stdin.readline()
        if not line:
            return None
        parts = line.split()
        if len(parts) != 2:
            print("enter two integers: tokens then matches")
            continue
        try:
            move = Move(t=int(parts[0]), m=int(parts[1]))
        except ValueError:
            print("enter two integers: tokens then matches")
            continue
        if move not in legal:
            print("not a legal move here")
            continue
        return move


def play_session(
    spec: GameSpec,
    start: GamePosition,
    engine_first: bool = False,
    stdin=None,
) -> int:
    stdin = stdin or sys.stdin
    pos = start
    engine_to_move = engine_first
    transcript: list[Move] = []
    print(f"engine verdict for the player to move: {takeaway.outcome(spec, pos).value}")
    while True:
        _show_position(spec, pos)
        legal = takeaway.legal_moves(spec, pos)
        if not legal:
            loser = "engine" if engine_to_move else "you"
            winner = "you" if engine_to_move else "engine"
            print(f"no legal moves: {loser} lose{'s' if loser == 'engine' else ''}, {winner} win{'s' if winner == 'engine' else ''}")
            break
        if engine_to_move:
            move = takeaway.best_move(spec, pos) or legal[0]
            print(f"engine plays t={move.t} m={move.m}")
        else:
            print(
                "legal moves: "
                + " ".join(f"({mv.t},{mv.m})" for mv in legal)
            )
            move = _read_move(legal, stdin)
            if move is None:
                print("\nsession aborted")
                return 1
        pos = takeaway.apply_move(spec, pos, move)
        transcript.append(move)
        engine_to_move = not engine_to_move
    print("transcript: " + ";".join(f"{mv.t},{mv.m}" for mv in transcript))
    return 0
