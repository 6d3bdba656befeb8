"""
Utility functions for formatting and displaying words, grids and matrices.
"""
import textwrap

import sympy

from words import Monoid, format_word

_LETTER = {Monoid.F: "τ", Monoid.H: "θ"}
_SUBSCRIPT = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def pretty_word(word, monoid):
    """
    Render a word with tau / theta letters.

    Args:
        word (Word): the word
        monoid (Monoid): selects tau (F) or theta (H)

    Returns:
        str: e.g. "θ₂θ₁θ₂", or "ε" for the empty word
    """
    if not word:
        return "ε"
    letter = _LETTER[Monoid(monoid)]
    return "".join(f"{letter}{str(k).translate(_SUBSCRIPT)}" for k in word)


def format_trace(trace):
    """One line per rewrite step: pos k: <before> -> <after>."""
    return [f"pos {pos}: {format_word(before)} -> {format_word(after)}" for pos, before, after in trace]


def _path(path):
    return ".".join(str(k + 1) for k in path)


def render_grid_ascii(grid):
    """
    List the cells of a reversing grid, one per line.

    Each line reads: [row r, col c] left | top -> bottom | right
    """
    lines = [f"grid {grid.presentation}: {format_word(grid.left_input)} / {format_word(grid.top_input)}"]
    for cell in sorted(grid.cells, key=lambda c: (c.row, c.col)):
        lines.append(
            f"[row {_path(cell.row)}, col {_path(cell.col)}] g{cell.left} | g{cell.top}"
            f" -> {format_word(cell.bottom)} | {format_word(cell.right)}"
        )
    lines.append(f"status: {grid.status}")
    return "\n".join(lines)


def render_grid_tikz(grid):
    """TikZ picture with the left and top edge of every cell, labels only."""
    rows = sorted({cell.row for cell in grid.cells})
    cols = sorted({cell.col for cell in grid.cells})
    y = {row: -i for i, row in enumerate(rows)}
    x = {col: i for i, col in enumerate(cols)}
    body = []
    for cell in grid.cells:
        cx, cy = x[cell.col], y[cell.row]
        body.append(f"\\draw[->] ({cx},{cy}) -- ({cx + 1},{cy}) node[midway,above] {{$g_{{{cell.top}}}$}};")
        body.append(f"\\draw[->] ({cx},{cy}) -- ({cx},{cy - 1}) node[midway,left] {{$g_{{{cell.left}}}$}};")
    return "\\begin{tikzpicture}\n" + textwrap.indent("\n".join(body), "  ") + "\n\\end{tikzpicture}"


def format_polynomial(expr):
    """Integer polynomial in t as "a+b*t+c*t^2", constant term first."""
    expr = sympy.expand(expr)
    if expr == 0:
        return "0"
    coefficients = sympy.Poly(expr, sympy.Symbol("t")).all_coeffs()[::-1]
    terms = []
    for power, coefficient in enumerate(coefficients):
        if coefficient == 0:
            continue
        if power == 0:
            terms.append(f"{coefficient}")
        elif power == 1:
            terms.append(f"{coefficient}*t")
        else:
            terms.append(f"{coefficient}*t^{power}")
    return "+".join(terms).replace("+-", "-")


def format_matrix(linear_map):
    """Rows of a truncated map, entries separated by spaces."""
    return [
        " ".join(format_polynomial(linear_map.entry(row, col)) for col in range(1, linear_map.dimension + 1))
        for row in range(1, linear_map.dimension + 1)
    ]
