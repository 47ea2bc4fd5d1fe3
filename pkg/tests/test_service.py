import json
import threading
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor

import pytest

from cagames import __version__, takeaway
from cagames.ca import evolve_window
from cagames.service import make_server
from cagames.specdoc import rule110_game_document
from cagames.takeaway import GamePosition

SPEC110 = rule110_game_document().to_dict()


@pytest.fixture(scope="module")
def server_port():
    server = make_server(0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield port
    server.shutdown()
    server.server_close()


def request(port, path, payload=None, method=None):
    url = f"http://127.0.0.1:{port}{path}"
    data = None if payload is None else json.dumps(payload).encode()
    req = urllib.request.Request(
        url, data=data, method=method or ("POST" if data else "GET"),
        headers={"Content-Type": "application/json"},
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read()), dict(resp.headers)
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read()), dict(err.headers)


def test_health(server_port):
    status, body, _ = request(server_port, "/api/health")
    assert status == 200
    assert body == {"status": "ok", "version": __version__}


def test_outcome_second_player_win(server_port):
    status, body, _ = request(
        server_port, "/api/game/outcome",
        {"spec": SPEC110, "position": {"X": 6, "Y": 2, "mp": 3}},
    )
    assert status == 200
    assert body == {"outcome": "P", "bestMove": None}


def test_outcome_with_best_move(server_port):
    status, body, _ = request(
        server_port, "/api/game/outcome",
        {"spec": SPEC110, "position": {"X": 6, "Y": 2, "mp": 4}},
    )
    assert status == 200
    assert body == {"outcome": "N", "bestMove": {"t": 6, "m": 2}}


def test_moves_match_engine(server_port):
    status, body, _ = request(
        server_port, "/api/game/moves",
        {"spec": SPEC110, "position": {"X": 6, "Y": 2, "m_p": 3}},
    )
    assert status == 200
    spec = rule110_game_document().game_spec()
    engine = takeaway.legal_moves(spec, GamePosition(6, 2, 3))
    assert body["moves"] == [{"t": mv.t, "m": mv.m} for mv in engine]


def test_apply_and_illegal_move(server_port):
    status, body, _ = request(
        server_port, "/api/game/apply",
        {"spec": SPEC110, "position": {"X": 6, "Y": 2, "mp": 3}, "move": {"t": 2, "m": 1}},
    )
    assert status == 200
    assert body == {"position": {"X": 4, "Y": 1, "mp": 1}}
    status, body, _ = request(
        server_port, "/api/game/apply",
        {"spec": SPEC110, "position": {"X": 6, "Y": 2, "mp": 3}, "move": {"t": 1, "m": 2}},
    )
    assert status == 422
    assert body["code"] == "illegal-move"
    assert body["clause"] == "black-token"


def test_predicate_endpoint(server_port):
    status, body, _ = request(
        server_port, "/api/game/predicate",
        {"spec": SPEC110, "position": {"X": 6, "Y": 2, "mp": 3}},
    )
    assert (status, body) == (200, {"outcome": "P"})
    status, body, _ = request(
        server_port, "/api/game/predicate",
        {"spec": SPEC110, "position": {"X": 3, "Y": 0, "mp": 2}},
    )
    assert status == 422
    assert body["code"] == "out-of-verified-domain"


def test_triangle_endpoint(server_port):
    status, body, _ = request(
        server_port, "/api/triangle/outcome",
        {"spec": SPEC110, "position": {"x": 4, "y": 2, "h": 0}},
    )
    assert status == 200
    assert body == {"outcome": "P", "predicate": "P"}


def test_window_matches_engine(server_port):
    status, body, _ = request(
        server_port, "/api/ca/window",
        {"spec": SPEC110, "x0": 1, "x1": 14, "rows": 8},
    )
    assert status == 200
    window = evolve_window(rule110_game_document().ca_system(), 1, 14, 8)
    assert body["cells"] == [[int(v) for v in row] for row in window.cells]
    assert body["x0"] == 1 and body["rows"] == 8


def test_window_budget(server_port):
    status, body, _ = request(
        server_port, "/api/ca/window",
        {"spec": SPEC110, "x0": 0, "x1": 200000, "rows": 20000},
    )
    assert status == 422
    assert body["code"] == "window-too-large"


def test_malformed_requests(server_port):
    status, body, _ = request(
        server_port, "/api/game/outcome",
        {"spec": {"gamma": 1}, "position": {"X": 1, "Y": 1, "mp": 1}},
    )
    assert (status, body["code"]) == (400, "malformed-spec")
    status, body, _ = request(
        server_port, "/api/game/outcome",
        {"spec": SPEC110, "position": {"X": 1, "Y": 1}},
    )
    assert (status, body["code"]) == (400, "malformed-request")
    status, body, _ = request(
        server_port, "/api/game/outcome",
        {"spec": SPEC110, "position": {"X": -1, "Y": 1, "mp": 0}},
    )
    assert (status, body["code"]) == (400, "malformed-request")
    status, body, _ = request(server_port, "/api/nope", {})
    assert (status, body["code"]) == (404, "not-found")


def test_cors_headers_present(server_port):
    _, _, headers = request(server_port, "/api/health")
    assert headers.get("Access-Control-Allow-Origin") == "*"


def test_concurrent_requests_are_independent(server_port):
    def ask(mp):
        return request(
            server_port, "/api/game/outcome",
            {"spec": SPEC110, "position": {"X": 6, "Y": 2, "mp": mp}},
        )[1]["outcome"]

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(ask, [mp % 7 for mp in range(40)]))
    for mp, got in zip([mp % 7 for mp in range(40)], results):
        assert got == ("P" if mp <= 3 else "N")


def test_static_ui_serving(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>board</body></html>")
    server = make_server(0, ui_dir=str(tmp_path))
    port = server.server_address[1]
    threading.Thread(target=server.serve_forever, daemon=True).start()
    try:
        with urllib.request.urlopen(f"http://127.0.0.1:{port}/") as resp:
            assert b"board" in resp.read()
        status, body, _ = request(port, "/api/health")
        assert status == 200
        with pytest.raises(urllib.error.HTTPError) as err:
            urllib.request.urlopen(f"http://127.0.0.1:{port}/../secret")
        assert err.value.code == 404
    finally:
        server.shutdown()
        server.server_close()


def test_cli_service_parity(server_port, capsys):
    from cagames.cli import main

    # outcome parity
    _, body, _ = request(
        server_port, "/api/game/outcome",
        {"spec": SPEC110, "position": {"X": 6, "Y": 2, "mp": 4}},
    )
    code = main(
        ["solve", "--gamma", "1", "--L", "0", "--C", SPEC110["C"], "--R", "0",
         "--X", "6", "--Y", "2", "--mp", "4", "--best-move"]
    )
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0] == body["outcome"]
    assert out[1] == f"t={body['bestMove']['t']},m={body['bestMove']['m']}"
    # window parity with evolve text rendering
    _, window_body, _ = request(
        server_port, "/api/ca/window", {"spec": SPEC110, "x0": 1, "x1": 8, "rows": 4}
    )
    main(["evolve", "--gamma", "1", "--L", "0", "--C", SPEC110["C"], "--R", "0",
          "--x0", "1", "--x1", "8", "--rows", "4"])
    text = capsys.readouterr().out.splitlines()
    for y, row in enumerate(window_body["cells"]):
        rendered = "".join(".#"[v] for v in row)
        assert text[4 - y] == rendered
