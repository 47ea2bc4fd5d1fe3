"""Stateless JSON-over-HTTP service exposing the engine.

Every response is a pure function of the request body; each request
builds its own engine state, so concurrent requests are independent.
Malformed input gets 400, domain violations get 422 — never 500.

Endpoints (POST unless noted):
    /api/ca/window        {spec, x0, x1, rows}          -> {cells, x0, rows}
    /api/game/moves       {spec, position}              -> {moves}
    /api/game/apply       {spec, position, move}        -> {position}
    /api/game/outcome     {spec, position}              -> {outcome, bestMove}
    /api/game/predicate   {spec, position}              -> {outcome}
    /api/triangle/outcome {spec, position}              -> {outcome, predicate}
    /api/health (GET)                                   -> {status, version}

Positions are {"X":..,"Y":..,"mp":..} for the take-away game (key "m_p"
is accepted on input) and {"x":..,"y":..,"h":..} for triangles. CORS is
wide open so a browser page served from anywhere can talk to the API.
"""

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import __version__, takeaway, triangle
from .ca import evolve_window
from .errors import DomainError, ResourceLimitError, SpecValidationError
from .specdoc import SpecDocument, parse_spec_document
from .takeaway import GamePosition, Move
from .triangle import TrianglePosition


class _BadRequest(Exception):
    def __init__(self, message: str, code: str = "malformed-request"):
        super().__init__(message)
        self.message = message
        self.code = code


def _get_int(obj: dict, key: str, aliases: tuple = ()) -> int:
    for k in (key, *aliases):
        if k in obj:
            value = obj[k]
            if isinstance(value, bool) or not isinstance(value, int):
                raise _BadRequest(f"field {key!r} must be an integer")
            return value
    raise _BadRequest(f"missing field {key!r}")


def _game_position(obj) -> GamePosition:
    if not isinstance(obj, dict):
        raise _BadRequest("position must be an object")
    try:
        return GamePosition(
            X=_get_int(obj, "X"),
            Y=_get_int(obj, "Y"),
            mp=_get_int(obj, "mp", aliases=("m_p",)),
        )
    except ValueError as exc:
        raise _BadRequest(str(exc)) from exc


def _triangle_position(obj) -> TrianglePosition:
    if not isinstance(obj, dict):
        raise _BadRequest("position must be an object")
    try:
        return TrianglePosition(
            x=_get_int(obj, "x"), y=_get_int(obj, "y"), h=_get_int(obj, "h")
        )
    except ValueError as exc:
        raise _BadRequest(str(exc)) from exc


def _move(obj) -> Move:
    if not isinstance(obj, dict):
        raise _BadRequest("move must be an object")
    return Move(t=_get_int(obj, "t"), m=_get_int(obj, "m"))


def _spec(obj) -> SpecDocument:
    if "spec" not in obj:
        raise _BadRequest("missing field 'spec'")
    return parse_spec_document(obj["spec"])


def _position_json(pos: GamePosition) -> dict:
    return {"X": pos.X, "Y": pos.Y, "mp": pos.mp}


def _json_safe(detail: dict) -> dict:
    safe = {}
    for key, value in detail.items():
        if isinstance(value, (str, int, float, bool, type(None))):
            safe[key] = value
        elif isinstance(value, (list, tuple)):
            safe[key] = [
                v if isinstance(v, (str, int, float, bool, type(None))) else str(v)
                for v in value
            ]
        else:
            safe[key] = str(value)
    return safe


def handle_ca_window(body: dict) -> dict:
    doc = _spec(body)
    x0 = _get_int(body, "x0")
    x1 = _get_int(body, "x1")
    rows = _get_int(body, "rows")
    if x0 > x1 or rows < 0:
        raise _BadRequest("need x0 <= x1 and rows >= 0")
    window = evolve_window(doc.ca_system(), x0, x1, rows)
    return {
        "cells": [[int(v) for v in row] for row in window.cells],
        "x0": window.x0,
        "rows": window.t,
    }


def handle_game_moves(body: dict) -> dict:
    spec = _spec(body).game_spec()
    pos = _game_position(body.get("position"))
    moves = takeaway.legal_moves(spec, pos)
    return {"moves": [{"t": mv.t, "m": mv.m} for mv in moves]}


def handle_game_apply(body: dict) -> dict:
    spec = _spec(body).game_spec()
    pos = _game_position(body.get("position"))
    move = _move(body.get("move"))
    nxt = takeaway.apply_move(spec, pos, move)
    return {"position": _position_json(nxt)}


def handle_game_outcome(body: dict) -> dict:
    spec = _spec(body).game_spec()
    pos = _game_position(body.get("position"))
    verdict = takeaway.outcome(spec, pos)
    best = takeaway.best_move(spec, pos)
    return {
        "outcome": verdict.value,
        "bestMove": None if best is None else {"t": best.t, "m": best.m},
    }


def handle_game_predicate(body: dict) -> dict:
    spec = _spec(body).game_spec()
    pos = _game_position(body.get("position"))
    return {"outcome": takeaway.predicted_outcome(spec, pos).value}


def handle_triangle_outcome(body: dict) -> dict:
    spec = _spec(body).game_spec()
    pos = _triangle_position(body.get("position"))
    return {
        "outcome": triangle.outcome(spec, pos).value,
        "predicate": triangle.predicted_outcome(spec, pos).value,
    }


POST_ROUTES = {
    "/api/ca/window": handle_ca_window,
    "/api/game/moves": handle_game_moves,
    "/api/game/apply": handle_game_apply,
    "/api/game/outcome": handle_game_outcome,
    "/api/game/predicate": handle_game_predicate,
    "/api/triangle/outcome": handle_triangle_outcome,
}

_STATIC_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".png": "image/png",
    ".svg": "image/svg+xml",
}


class EngineRequestHandler(BaseHTTPRequestHandler):
    server_version = "cagames/" + __version__
    ui_dir: Path | None = None

    # silence per-request stderr logging; tests and scripted clients
    # drive this server hard
    def log_message(self, format, *args):
        pass

    def _send_json(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/health":
            self._send_json(200, {"status": "ok", "version": __version__})
            return
        if self.ui_dir is not None:
            self._serve_static()
            return
        self._send_json(404, {"code": "not-found", "message": "unknown endpoint"})

    def do_POST(self):
        handler = POST_ROUTES.get(self.path)
        if handler is None:
            self._send_json(404, {"code": "not-found", "message": "unknown endpoint"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length)
            try:
                body = json.loads(raw) if raw else {}
            except json.JSONDecodeError as exc:
                raise _BadRequest(f"body is not valid JSON: {exc}") from exc
            if not isinstance(body, dict):
                raise _BadRequest("body must be a JSON object")
            self._send_json(200, handler(body))
        except SpecValidationError as exc:
            self._send_json(
                400, {"code": exc.code, "message": exc.message, **_json_safe(exc.detail)}
            )
        except _BadRequest as exc:
            self._send_json(400, {"code": exc.code, "message": exc.message})
        except DomainError as exc:
            self._send_json(
                422, {"code": exc.code, "message": exc.message, **_json_safe(exc.detail)}
            )
        except ResourceLimitError as exc:
            self._send_json(
                422, {"code": exc.code, "message": exc.message, **_json_safe(exc.detail)}
            )

    def _serve_static(self):
        rel = self.path.split("?", 1)[0].lstrip("/")
        if not rel:
            rel = "index.html"
        base = self.ui_dir.resolve()
        target = (base / rel).resolve()
        if base not in target.parents and target != base:
            self._send_json(404, {"code": "not-found", "message": "outside ui dir"})
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._send_json(404, {"code": "not-found", "message": "no such file"})
            return
        data = target.read_bytes()
        self.send_response(200)
        ctype = _STATIC_TYPES.get(target.suffix, "application/octet-stream")
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)


def make_server(port: int, ui_dir: str | None = None) -> ThreadingHTTPServer:
    return ThreadingHTTPServer(("127.0.0.1", port), _make_handler_class(ui_dir))


def _make_handler_class(ui_dir: str | None):
    if ui_dir is None:
        return EngineRequestHandler
    return type(
        "EngineRequestHandlerWithUI",
        (EngineRequestHandler,),
        {"ui_dir": Path(ui_dir)},
    )


def serve(port: int, ui_dir: str | None = None) -> None:
    """Run the service until interrupted."""
    server = make_server(port, ui_dir=ui_dir)
    host, bound_port = server.server_address[:2]
    print(f"serving on http://{host}:{bound_port}", flush=True)
    try:
        server.serve_forever()
    finally:
        server.server_close()
