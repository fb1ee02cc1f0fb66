from __future__ import annotations

from pathlib import Path

import pytest

from conftest import arc
from friezeforge.gmodules import pi
from friezeforge.patterns import (
    GridError,
    arc_at,
    ar_coordinates,
    bundled_grid,
    domain_position,
    frieze_check,
    grid_from_values,
    load_grid,
    parse_grid,
    same_up_to_shift,
)
from friezeforge.polygon import all_diagonals, ar_triangle, suspend, triangulations

DATA = Path(__file__).parent / "data"

# coordinates of the A5 quiver, including the glide-repeated column 8
A5_LAYOUT = {
    (0, 0): (1, 3), (2, 0): (2, 4), (4, 0): (3, 5), (6, 0): (4, 6), (8, 0): (5, 7),
    (1, 1): (1, 4), (3, 1): (2, 5), (5, 1): (3, 6), (7, 1): (4, 7),
    (0, 2): (4, 8), (2, 2): (1, 5), (4, 2): (2, 6), (6, 2): (3, 7), (8, 2): (4, 8),
    (1, 3): (5, 8), (3, 3): (1, 6), (5, 3): (2, 7), (7, 3): (3, 8),
    (0, 4): (5, 7), (2, 4): (6, 8), (4, 4): (1, 7), (6, 4): (2, 8), (8, 4): (1, 3),
}


def test_a5_layout():
    for (x, y), pair in A5_LAYOUT.items():
        assert arc_at(5, x, y) == arc(*pair)
    for a in all_diagonals(5):
        assert arc_at(5, *ar_coordinates(a)) == a
        x, y = domain_position(a)
        assert 0 <= x < 8 and A5_LAYOUT[(x, y)] == (a.i, a.j)


def test_meshes_match_ar_triangles():
    for n in (3, 5, 6):
        for c in all_diagonals(n):
            x, y = ar_coordinates(c)
            assert arc_at(n, x - 2, y) == suspend(c)
            middle = {arc_at(n, x - 1, y + d) for d in (-1, 1) if 0 <= y + d < n}
            assert middle == set(ar_triangle(c).y)


def test_bundled_frieze_passes():
    g = bundled_grid()
    assert g.rows == 7 and g.width == 10
    rep = frieze_check(g)
    assert rep.passed and rep.checked == 35


def test_bottom_boundary_examples():
    g = bundled_grid()
    # 4*1 - 3 = 1 on the bottom row
    assert (g.value(0, 0), g.value(2, 0), g.value(1, 1)) == (4, 1, 3)
    assert g.value(0, 0) * g.value(2, 0) - g.value(1, 1) == 1
    # 3*2 - 5*1 = 1 one row up
    assert g.value(1, 1) * g.value(3, 1) - g.value(2, 2) * g.value(2, 0) == 1


def test_bundled_frieze_is_a_triangulation_frieze():
    g = bundled_grid()
    hits = [
        T for T in triangulations(7)
        if same_up_to_shift(g, grid_from_values(7, lambda c, T=T: pi(T, c))) is not None
    ]
    assert len(hits) == 10


def test_misprint_fails_at_exactly_four_diamonds():
    rep = frieze_check(load_grid(DATA / "a7_frieze_misprint.txt"))
    got = {d.centre: d.delta for d in rep.failures}
    assert got == {(5, 2): -4, (4, 3): 8, (6, 3): 4, (5, 4): 0}


def test_perturbation_reports_coordinates():
    text = bundled_grid().to_text().replace("3 2 1 4", "3 3 1 4")
    rep = frieze_check(parse_grid(text))
    assert not rep.passed
    assert {d.centre for d in rep.failures} == {(5, 0), (7, 0), (6, 1)}
    assert "diamond at (5,0)" in str(rep.failures[0])


def test_to_text_round_trip():
    g = bundled_grid()
    assert parse_grid(g.to_text()).cells == g.cells


def test_malformed_grids():
    with pytest.raises(GridError, match="alternating"):
        parse_grid("1 1 1 1\n1 1 1 1 1\n")
    with pytest.raises(GridError):
        parse_grid("")
    with pytest.raises(GridError, match="non-integer"):
        parse_grid("1 x 1\n")
    with pytest.raises(GridError, match="full period"):
        parse_grid(". 1\n1 1\n")
    text = bundled_grid().to_text().replace("4 1 3 2 1 4", "4 1 3 2 1 5")
    with pytest.raises(GridError, match="glide"):
        parse_grid(text)


def test_generalised_grid_from_config(a5):
    g = grid_from_values(5, lambda c: pi(a5.R, c))
    assert not frieze_check(g).passed
    assert frieze_check(g, generalized=True).passed
    ctx = a5.context()
    from friezeforge.engine import rho_direct

    assert frieze_check(grid_from_values(5, lambda c: rho_direct(ctx, c)), generalized=True).passed
