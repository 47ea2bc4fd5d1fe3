import random

import numpy as np
import pytest

from cagames.background import step_background
from cagames.ca import CAParams, CASystem, SpacetimeWindow, evolve_window
from cagames.render import parse_pbm, pbm_to_window, render, render_pbm, render_text
from oracles import pascal_cell, random_background


def window_of(cells, x0=0):
    arr = np.array(cells, dtype=np.uint8)
    return SpacetimeWindow(x0=x0, x1=x0 + arr.shape[1] - 1, t=arr.shape[0] - 1, cells=arr)


def test_single_cell_pbm():
    assert render_pbm(window_of([[1]])) == b"P1\n1 1\n1\n"


def test_two_by_two_zero_text():
    assert render_text(window_of([[0, 0], [0, 0]])) == "..\n..\n"


def test_text_top_line_is_latest_row():
    win = window_of([[0, 0], [1, 1]])  # row y=1 is all ones
    assert render_text(win) == "##\n..\n"


def test_rule60_text_matches_binomial_oracle():
    sys = CASystem(params=CAParams(0, 0), background=step_background())
    text = render_text(evolve_window(sys, 1, 8, 8)).splitlines()
    for y in range(0, 9):
        expected = "".join(".#"[pascal_cell(x, y)] for x in range(1, 9))
        assert text[8 - y] == expected


def test_render_dispatch():
    win = window_of([[1, 0]])
    assert render(win, "text") == b"#.\n"
    assert render(win, "pbm").startswith(b"P1\n2 1\n")
    with pytest.raises(ValueError):
        render(win, "gif")


def test_pbm_round_trip_random_windows():
    rng = random.Random(3)
    for _ in range(20):
        sys = CASystem(
            params=CAParams(rng.randint(0, 2), rng.randint(0, 2)),
            background=random_background(rng),
        )
        x0 = rng.randint(-5, 2)
        win = evolve_window(sys, x0, x0 + rng.randint(0, 9), rng.randint(0, 9))
        back = pbm_to_window(render_pbm(win), x0=win.x0)
        assert back.x0 == win.x0 and back.x1 == win.x1 and back.t == win.t
        assert np.array_equal(back.cells, win.cells)


def test_parse_pbm_tolerates_comments_and_whitespace():
    grid = parse_pbm(b"P1\n# comment line\n 2 2\n1 0\n0  1\n")
    assert grid.tolist() == [[1, 0], [0, 1]]


def test_parse_pbm_rejects_garbage():
    with pytest.raises(ValueError):
        parse_pbm(b"P5\n1 1\n1\n")
    with pytest.raises(ValueError):
        parse_pbm(b"P1\n2 2\n101\n")
    with pytest.raises(ValueError):
        parse_pbm(b"P1\n1 1\n7\n")
