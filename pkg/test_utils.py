"""
Test word, grid and polynomial formatting
"""
from morphisms import rho_tilde_of_word, t
from presentation import P_F, P_H
from reversing import reverse_right
from utils import format_matrix, format_polynomial, format_trace, pretty_word, render_grid_ascii, render_grid_tikz
from words import Monoid


def test_pretty_word():
    assert pretty_word((2, 1, 2), Monoid.H) == "θ₂θ₁θ₂"
    assert pretty_word((4, 3), Monoid.F) == "τ₄τ₃"
    assert pretty_word((12,), "F") == "τ₁₂"
    assert pretty_word((), Monoid.H) == "ε"


def test_format_trace():
    lines = format_trace([(0, (1, 2, 4), (2, 1, 2))])
    assert lines == ["pos 0: g1 g2 g4 -> g2 g1 g2"]


def test_format_polynomial():
    assert format_polynomial(0) == "0"
    assert format_polynomial(1 - t) == "1-1*t"
    assert format_polynomial(1 + t) == "1+1*t"
    assert format_polynomial(-t) == "-1*t"
    assert format_polynomial(2 * t**2 - 3) == "-3+2*t^2"
    assert format_polynomial(t**0) == "1"


def test_format_matrix_rows():
    rows = format_matrix(rho_tilde_of_word((1,), 5))
    assert rows[0] == "1 0 0 0 0"
    assert rows[1] == "1*t 1-1*t 0 0 0"
    assert rows[2] == "1+1*t -1*t 0 0 0"
    assert rows[3] == "0 0 1 0 0"


def test_render_grid_ascii():
    grid = reverse_right(P_F, (1,), (2,), 10)
    text = render_grid_ascii(grid)
    assert text.splitlines()[0] == "grid P_F: g1 / g2"
    assert "[row 1, col 1] g1 | g2 -> g3 | g1" in text
    assert text.splitlines()[-1] == "status: complete"


def test_render_grid_tikz():
    grid = reverse_right(P_H, (1,), (2, 1), 100)
    text = render_grid_tikz(grid)
    assert text.startswith("\\begin{tikzpicture}")
    assert text.endswith("\\end{tikzpicture}")
    assert text.count("\\draw") == 2 * len(grid.cells)
    assert "$g_{2}$" in text
