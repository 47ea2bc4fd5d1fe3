"""Command-line front end.

Every subcommand reads the system description either from a JSON file
(--spec FILE with fields gamma, Gamma, L, C, R, xi) or from the inline
flags of the same names. Exit codes: 0 success, 1 domain error (illegal
position or move, malformed spec, mismatches found), 2 resource-guard
refusal. Diagnostics go to stderr, results to stdout.
"""

import argparse
import sys

from . import __version__, analysis, takeaway, triangle
from .ca import DEFAULT_CELL_BUDGET, evolve_window
from .errors import DomainError, ResourceLimitError
from .render import FORMATS, render
from .specdoc import SpecDocument, load_spec_document, parse_spec_document
from .takeaway import GamePosition, Move
from .triangle import TrianglePosition
from .verdicts import Outcome


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("system description")
    group.add_argument("--spec", metavar="FILE", help="JSON spec document")
    group.add_argument("--gamma", type=int, default=0)
    group.add_argument("--Gamma", type=int, default=0)
    group.add_argument("--L", default="0")
    group.add_argument("--C", default="")
    group.add_argument("--R", default="1")
    group.add_argument("--xi", type=int, default=0)


def _spec_from_args(args) -> SpecDocument:
    if args.spec:
        return load_spec_document(args.spec)
    return parse_spec_document(
        {
            "gamma": args.gamma,
            "Gamma": args.Gamma,
            "L": args.L,
            "C": args.C,
            "R": args.R,
            "xi": args.xi,
        }
    )


def _parse_window(text: str) -> tuple[int, int]:
    """'x0:x1' -> (x0, x1)."""
    try:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise DomainError(f"window must look like 'x0:x1', got {text!r}")
    if lo > hi:
        raise DomainError(f"window lower bound {lo} exceeds upper bound {hi}")
    return lo, hi


def _parse_path(text: str) -> list[Move]:
    """'t,m;t,m;...' -> moves."""
    moves = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            t_s, m_s = part.split(",", 1)
            moves.append(Move(t=int(t_s), m=int(m_s)))
        except ValueError:
            raise DomainError(f"bad move {part!r}; expected 't,m'")
    return moves


def _emit(data: bytes, out: str | None) -> None:
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _print_report(report, label: str) -> int:
    print(f"{len(report)} mismatches ({report.checked} positions checked)")
    for miss in report.entries:
        print(f"  {label} {miss.position}: solver={miss.solver} predicate={miss.predicate}")
    return 0 if report.ok else 1


def cmd_evolve(args) -> int:
    doc = _spec_from_args(args)
    window = evolve_window(
        doc.ca_system(), args.x0, args.x1, args.rows, cell_budget=args.cell_budget
    )
    _emit(render(window, args.format), args.out)
    return 0


def cmd_solve(args) -> int:
    spec = _spec_from_args(args).game_spec()
    pos = GamePosition(X=args.X, Y=args.Y, mp=args.mp)
    print(takeaway.outcome(spec, pos).value)
    if args.best_move:
        move = takeaway.best_move(spec, pos)
        print("none" if move is None else f"t={move.t},m={move.m}")
    return 0


def cmd_tri_solve(args) -> int:
    spec = _spec_from_args(args).game_spec()
    pos = TrianglePosition(x=args.x, y=args.y, h=args.h)
    print(triangle.outcome(spec, pos).value)
    print(f"predicate={triangle.predicted_outcome(spec, pos).value}")
    return 0


def cmd_verify_thm2(args) -> int:
    spec = _spec_from_args(args).game_spec()
    report = takeaway.verify_predictions(
        spec, args.xmax, args.ymax, args.mpmax, mp_min=args.mpmin
    )
    return _print_report(report, "position")


def cmd_verify_thm3(args) -> int:
    spec = _spec_from_args(args).game_spec()
    report = triangle.verify_predictions(
        spec, args.xmin, args.xmax, args.ymax, args.hmax
    )
    return _print_report(report, "triangle")


def cmd_periodicity(args) -> int:
    sys_ = _spec_from_args(args).ca_system()
    x0, x1 = _parse_window(args.window)
    verdict = analysis.detect_periodicity(
        sys_,
        delta_max=args.dmax,
        rho_max=args.rmax,
        y_burnin=args.burnin,
        x0=x0,
        x1=x1,
        t_max=args.tmax,
        cell_budget=args.cell_budget,
    )
    if verdict.periodic:
        print(f"periodic delta={verdict.delta} rho={verdict.rho} onset={verdict.onset}")
    else:
        print(
            "unknown within bounds "
            f"(dmax={args.dmax} rmax={args.rmax} window=[{x0},{x1}] tmax={args.tmax})"
        )
    return 0


def cmd_converge(args) -> int:
    doc_a = _spec_from_args(args)
    doc_b = load_spec_document(args.spec2)
    x0, x1 = _parse_window(args.window)
    verdict = analysis.check_convergence(
        doc_a.ca_system(), doc_b.ca_system(), args.yfrom, args.yto, x0, x1
    )
    if verdict.diverged:
        print(f"divergence at x={verdict.x} y={verdict.y}")
    else:
        print(
            f"agree on tested region y=[{args.yfrom},{args.yto}] window=[{x0},{x1}]"
        )
    return 0


def cmd_search(args) -> int:
    doc = _spec_from_args(args)
    sys_ = doc.ca_system()
    if args.window:
        x0, x1 = _parse_window(args.window)
    else:
        # default: cover everything the center word (plus pattern slack)
        # can influence by the last searched row
        pad = len(args.pattern)
        x0 = -doc.xi - args.ymax * doc.gamma - pad
        x1 = max(len(doc.C), 1) - doc.xi + args.ymax * (doc.Gamma + 1) + pad
    hits = analysis.find_pattern(
        sys_,
        args.pattern,
        x0=x0,
        x1=x1,
        y_from=args.ymin,
        y_to=args.ymax,
        include_reversed=not args.no_reverse,
        cell_budget=args.cell_budget,
    )
    for hit in hits:
        print(f"y={hit.y} x={hit.x} {'reversed' if hit.reversed else 'forward'}")
    print(f"{len(hits)} hits")
    return 0


def cmd_path_check(args) -> int:
    spec = _spec_from_args(args).game_spec()
    start = GamePosition(X=args.X, Y=args.Y, mp=args.mp)
    verdict = takeaway.verify_path(spec, start, _parse_path(args.path))
    if verdict.optimal:
        print("optimal")
        return 0
    print(f"failure at index {verdict.failure_index}: {verdict.reason}")
    return 1


def cmd_play(args) -> int:
    from .play import play_session

    spec = _spec_from_args(args).game_spec()
    start = GamePosition(X=args.X, Y=args.Y, mp=args.mp)
    return play_session(spec, start, engine_first=args.engine_first)


def cmd_serve(args) -> int:
    from .service import serve

    serve(args.port, ui_dir=args.ui_dir)
    return 0


def cmd_report(args) -> int:
    from .report import save_spacetime_figure, write_grid_csv

    doc = _spec_from_args(args)
    spec = doc.game_spec()
    window = evolve_window(
        spec.ca, args.x0, args.x1, args.rows, cell_budget=args.cell_budget
    )
    if args.csv:
        write_grid_csv(window, args.csv)
        print(f"wrote {args.csv}")
    p_cells = None
    if args.mark_p_mp is not None:
        mp = args.mark_p_mp
        p_cells = []
        for y in range(1, args.rows + 1):
            for x in range(args.x0, args.x1 + 1):
                X = x + doc.gamma * y
                if X < 0:
                    continue
                pos = GamePosition(X=X, Y=y, mp=mp)
                if takeaway.predicted_outcome(spec, pos) is Outcome.P:
                    p_cells.append((x, y))
    if args.png:
        save_spacetime_figure(window, args.png, title=args.title, p_cells=p_cells)
        print(f"wrote {args.png}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cagames",
        description="windowed cellular automata and the games that emulate them",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="evolve a spacetime window and render it")
    _add_spec_args(p)
    p.add_argument("--x0", type=int, required=True)
    p.add_argument("--x1", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("solve", help="outcome of a take-away position")
    _add_spec_args(p)
    p.add_argument("--X", type=int, required=True)
    p.add_argument("--Y", type=int, required=True)
    p.add_argument("--mp", type=int, required=True)
    p.add_argument("--best-move", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tri-solve", help="outcome of a triangle position")
    _add_spec_args(p)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.set_defaults(func=cmd_tri_solve)

    p = sub.add_parser(
        "verify-thm2",
        help="compare take-away solver and CA prediction exhaustively",
    )
    _add_spec_args(p)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--ymax", type=int, required=True)
    p.add_argument("--mpmax", type=int, required=True)
    p.add_argument(
        "--mpmin",
        type=int,
        default=1,
        help="lower mp bound (default 1; mp=0 only provably matches at window size one)",
    )
    p.set_defaults(func=cmd_verify_thm2)

    p = sub.add_parser(
        "verify-thm3",
        help="compare triangle solver and CA prediction exhaustively",
    )
    _add_spec_args(p)
    p.add_argument("--xmin", type=int, required=True)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--ymax", type=int, required=True)
    p.add_argument("--hmax", type=int, required=True)
    p.set_defaults(func=cmd_verify_thm3)

    p = sub.add_parser("periodicity", help="bounded two-dimensional period search")
    _add_spec_args(p)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--burnin", type=int, required=True)
    p.add_argument("--window", required=True, metavar="X0:X1")
    p.add_argument("--tmax", type=int, default=None)
    p.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET)
    p.set_defaults(func=cmd_periodicity)

    p = sub.add_parser("converge", help="scan two systems for a differing cell")
    _add_spec_args(p)
    p.add_argument("--spec2", required=True, metavar="FILE")
    p.add_argument("--yfrom", type=int, required=True)
    p.add_argument("--yto", type=int, required=True)
    p.add_argument("--window", required=True, metavar="X0:X1")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("search", help="find a bit pattern in evolved rows")
    _add_spec_args(p)
    p.add_argument("--pattern", required=True, metavar="BITS")
    p.add_argument("--no-reverse", action="store_true")
    p.add_argument("--ymax", type=int, required=True)
    p.add_argument("--ymin", type=int, default=0)
    p.add_argument("--window", metavar="X0:X1")
    p.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("path-check", help="verify an alternating move path")
    _add_spec_args(p)
    p.add_argument("--X", type=int, required=True)
    p.add_argument("--Y", type=int, required=True)
    p.add_argument("--mp", type=int, required=True)
    p.add_argument("--path", required=True, metavar="t,m;t,m;...")
    p.set_defaults(func=cmd_path_check)

    p = sub.add_parser("play", help="interactive human-vs-engine session")
    _add_spec_args(p)
    p.add_argument("--X", type=int, required=True)
    p.add_argument("--Y", type=int, required=True)
    p.add_argument("--mp", type=int, required=True)
    p.add_argument("--engine-first", action="store_true")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    _add_spec_args(p)
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--ui-dir", metavar="DIR", help="also serve this directory at /")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser(
        "report", help="write a matplotlib figure and CSV grid for a window"
    )
    _add_spec_args(p)
    p.add_argument("--x0", type=int, required=True)
    p.add_argument("--x1", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--png", metavar="FILE")
    p.add_argument("--csv", metavar="FILE")
    p.add_argument("--title")
    p.add_argument(
        "--mark-p-mp",
        type=int,
        metavar="MP",
        help="overlay predicted P positions for this mp",
    )
    p.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "periodicity" and args.tmax is None:
        args.tmax = args.burnin + 4 * args.rmax
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error[{exc.code}]: {exc.message}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error[invalid-argument]: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"refused[{exc.code}]: {exc.message}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error[no-such-file]: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
