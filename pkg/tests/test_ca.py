import random

import pytest

from cagames.background import (
    BackgroundSpec,
    all_zero_background,
    step_background,
    with_flipped_value,
)
from cagames.ca import (
    CAParams,
    CASystem,
    ca_cell,
    evolve_window,
    local_rule_table,
    wolfram_code,
)
from cagames.errors import TableTooLargeError, WindowTooLargeError
from oracles import pascal_cell, random_background

RULE60 = CAParams(gamma=0, Gamma=0)


def rule60_step() -> CASystem:
    return CASystem(params=RULE60, background=step_background())


def rule110_game_system() -> CASystem:
    return CASystem(
        params=CAParams(gamma=1, Gamma=0),
        background=BackgroundSpec(left="0", center="11010011101100", right="0"),
    )


def test_params_validation():
    with pytest.raises(ValueError):
        CAParams(gamma=-1, Gamma=0)
    with pytest.raises(ValueError):
        CAParams(gamma=0, Gamma=-2)


def test_rule60_single_cell_is_pascal():
    sys = rule60_step()
    assert ca_cell(sys, 4, 4) == 1  # C(3,3) is odd
    for y in range(0, 24):
        for x in range(-4, 26):
            assert ca_cell(sys, x, y) == pascal_cell(x, y), (x, y)


def test_center_word_row_one_cells():
    sys = rule110_game_system()
    assert ca_cell(sys, 8, 1) == 0
    assert ca_cell(sys, 4, 1) == 1


def test_all_zero_background_stays_zero():
    sys = CASystem(params=CAParams(gamma=2, Gamma=1), background=all_zero_background())
    for x in range(-6, 7):
        for y in range(0, 6):
            assert ca_cell(sys, x, y) == 0


def test_negative_time_rejected():
    with pytest.raises(ValueError):
        ca_cell(rule60_step(), 0, -1)


def test_xor_reduction_for_minimal_params():
    rng = random.Random(5)
    for _ in range(20):
        sys = CASystem(params=RULE60, background=random_background(rng))
        for _ in range(30):
            x = rng.randint(-8, 8)
            y = rng.randint(1, 8)
            assert ca_cell(sys, x, y) == ca_cell(sys, x - 1, y - 1) ^ ca_cell(
                sys, x, y - 1
            )


def test_evolve_window_matches_cells_pointwise():
    rng = random.Random(9)
    for _ in range(25):
        params = CAParams(gamma=rng.randint(0, 3), Gamma=rng.randint(0, 3))
        bg = random_background(rng)
        window = evolve_window(
            CASystem(params=params, background=bg),
            rng.randint(-6, 0),
            rng.randint(1, 8),
            rng.randint(0, 7),
        )
        fresh = CASystem(params=params, background=bg)
        for y in range(window.t + 1):
            for x in range(window.x0, window.x1 + 1):
                assert window.cell(x, y) == ca_cell(fresh, x, y), (params, bg, x, y)


def test_evolve_window_pascal_rows():
    window = evolve_window(rule60_step(), 1, 4, 4)
    expected = [[pascal_cell(x, y) for x in range(1, 5)] for y in range(5)]
    assert window.cells.tolist() == expected


def test_evolve_window_validation_and_budget():
    sys = rule60_step()
    with pytest.raises(ValueError):
        evolve_window(sys, 5, 1, 3)
    with pytest.raises(WindowTooLargeError):
        evolve_window(sys, 0, 10_000, 10_000, cell_budget=1000)


def test_figure_grid_center_word():
    """Pinned spacetime grid for the 14-cell center word (rows 0..8)."""
    red = {
        (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
        (2, 0), (2, 1), (2, 3), (2, 4), (2, 6), (2, 8),
        (3, 1), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8),
        (4, 0), (4, 1), (4, 5), (4, 7), (4, 8),
        (5, 1), (5, 2), (5, 3), (5, 4), (5, 5), (5, 8),
        (6, 2), (6, 4), (6, 5),
        (7, 0), (7, 1), (7, 2), (7, 5), (7, 6), (7, 7),
        (8, 0), (8, 2), (8, 6),
        (9, 0), (9, 1), (9, 2), (9, 3), (9, 4), (9, 5),
        (10, 1), (10, 3), (10, 4),
        (11, 0), (11, 1),
        (12, 0), (12, 1),
        (13, 1),
    }
    # upper-right wedge outside the influence region under study
    gray = {
        (7, 8), (8, 7), (8, 8), (9, 6), (9, 7), (9, 8),
        (10, 5), (10, 6), (10, 7), (10, 8),
        (11, 4), (11, 5), (11, 6), (11, 7), (11, 8),
        (12, 3), (12, 4), (12, 5), (12, 6), (12, 7), (12, 8),
        (13, 2), (13, 3), (13, 4), (13, 5), (13, 6), (13, 7), (13, 8),
        (14, 1), (14, 2), (14, 3), (14, 4), (14, 5), (14, 6), (14, 7), (14, 8),
    }
    window = evolve_window(rule110_game_system(), 1, 14, 8)
    for y in range(0, 9):
        for x in range(1, 15):
            if (x, y) in gray:
                continue
            assert window.cell(x, y) == (1 if (x, y) in red else 0), (x, y)


def test_cone_locality_sampled():
    rng = random.Random(31)
    for _ in range(60):
        params = CAParams(gamma=rng.randint(0, 3), Gamma=rng.randint(0, 3))
        bg = random_background(rng)
        x_star = rng.randint(-5, 5)
        y_star = rng.randint(0, 5)
        lo = x_star - y_star * (params.Gamma + 1)
        hi = x_star + y_star * params.gamma
        x_mut = rng.choice([lo - rng.randint(1, 6), hi + rng.randint(1, 6)])
        base = ca_cell(CASystem(params=params, background=bg), x_star, y_star)
        mutated = ca_cell(
            CASystem(params=params, background=with_flipped_value(bg, x_mut)),
            x_star,
            y_star,
        )
        assert base == mutated


def test_row_tails_inherit_word_periods():
    # outside the influence cone of the center word and the seam, row y is
    # |L|-periodic on the left of C_start-1-y*gamma and |R|-periodic right
    # of C_end+1+y*(Gamma+1)
    rng = random.Random(37)
    for _ in range(25):
        params = CAParams(gamma=rng.randint(0, 2), Gamma=rng.randint(0, 2))
        bg = random_background(rng, xi_span=0)
        sys = CASystem(params=params, background=bg)
        n_l, n_r, n_c = len(bg.left), len(bg.right), len(bg.center)
        for y in range(0, 5):
            left_edge = 1 - 1 - y * params.gamma  # C starts at 1
            for x in range(left_edge - 8, left_edge + 1 - n_l):
                assert ca_cell(sys, x, y) == ca_cell(sys, x + n_l, y)
            right_edge = n_c + 1 + y * (params.Gamma + 1)
            for x in range(right_edge, right_edge + 8):
                assert ca_cell(sys, x, y) == ca_cell(sys, x + n_r, y)


def test_rule_table_minimal_params_is_xor():
    table = local_rule_table(RULE60)
    assert table.window_len == 2
    assert table.output((0, 0)) == 0
    assert table.output((0, 1)) == 1
    assert table.output((1, 0)) == 1
    assert table.output((1, 1)) == 0


def test_rule_table_gamma1_zero_neighborhoods():
    table = local_rule_table(CAParams(gamma=1, Gamma=0))
    zeros = {
        tuple((n >> (2 - i)) & 1 for i in range(3))
        for n in range(8)
        if table.outputs[n] == 0
    }
    assert zeros == {(0, 0, 0), (0, 0, 1), (1, 1, 1)}


def test_rule_table_Gamma1_reads_two_left_cells():
    table = local_rule_table(CAParams(gamma=0, Gamma=1))
    for n in range(8):
        bits = tuple((n >> (2 - i)) & 1 for i in range(3))
        # window is (x-2, x-1, x): zero iff pair (x-1, x) is 00 or all ones
        expected = 0 if (bits[1] == 0 and bits[2] == 0) or bits == (1, 1, 1) else 1
        assert table.outputs[n] == expected


def test_rule_table_consistency_with_cells():
    rng = random.Random(41)
    for _ in range(15):
        params = CAParams(gamma=rng.randint(0, 2), Gamma=rng.randint(0, 2))
        bg = random_background(rng)
        sys = CASystem(params=params, background=bg)
        table = local_rule_table(params)
        for _ in range(25):
            x = rng.randint(-6, 6)
            y = rng.randint(1, 6)
            window = [
                ca_cell(sys, xx, y - 1)
                for xx in range(x - params.Gamma - 1, x + params.gamma + 1)
            ]
            assert ca_cell(sys, x, y) == table.output(window)


def test_wolfram_codes():
    assert wolfram_code(RULE60) == 60
    assert wolfram_code(CAParams(gamma=1, Gamma=0)) == 124


def test_table_cap():
    with pytest.raises(TableTooLargeError):
        local_rule_table(CAParams(gamma=12, Gamma=12))
    with pytest.raises(TableTooLargeError):
        wolfram_code(CAParams(gamma=12, Gamma=12))


def test_memo_is_pure():
    sys = rule60_step()
    first = [ca_cell(sys, x, 7) for x in range(0, 10)]
    second = [ca_cell(sys, x, 7) for x in range(0, 10)]
    assert first == second
    fresh = rule60_step()
    assert first == [ca_cell(fresh, x, 7) for x in range(0, 10)]
