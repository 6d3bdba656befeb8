"""
Subword reversing grids.

Right reversing rewrites the signed word u^-1 v by replacing the leftmost
factor s^-1 t with bottom right^-1, where s bottom = t right is the relation
starting with s and t. The process stops on a word v1 u1^-1, giving the
output pair (u1, v1).
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from presentation import BudgetExceeded, P_F, mirrored, oracle_equal
from words import ceiling, reverse

logger = logging.getLogger(__name__)

COMPLETE = "complete"
BUDGET_EXCEEDED = "budget_exceeded"
STUCK = "stuck"
CEILING_EXCEEDED = "ceiling_exceeded"


class ReversingInconclusive(BudgetExceeded):
    """A grid needed for a definite answer did not close within budget."""


@dataclass(frozen=True)
class ComplementEntry:
    left: int
    top: int
    bottom: tuple
    right: tuple


@lru_cache(maxsize=65536)
def complement(p, s, t):
    """
    The cell with left edge s and top edge t, or None when no relation
    starts with s and t (only for mirrored presentations).
    """
    if s == t:
        return ComplementEntry(s, t, (), ())
    for a, b in p.instances(max(s, t) + 3):
        if a[0] == s and b[0] == t:
            return ComplementEntry(s, t, a[1:], b[1:])
        if b[0] == s and a[0] == t:
            return ComplementEntry(s, t, b[1:], a[1:])
    return None


@dataclass(frozen=True)
class GridCell:
    """One reversing step; row and col are tuple paths refining the input edges."""

    row: tuple
    col: tuple
    left: int
    top: int
    bottom: tuple
    right: tuple


@dataclass
class ReversingGrid:
    presentation: str
    left_input: tuple
    top_input: tuple
    cells: list = field(default_factory=list)
    right_output: tuple = ()
    bottom_output: tuple = ()
    status: str = COMPLETE

    @property
    def complete(self):
        return self.status == COMPLETE


def _split(path, letters):
    if len(letters) == 1:
        return [path]
    return [path + (k,) for k in range(len(letters))]


def reverse_right(p, u, v, budget, max_index=None):
    """
    Build the right reversing grid from (u, v).

    Args:
        p (Presentation): complemented presentation
        u (Word): left input, read downwards
        v (Word): top input, read rightwards
        budget (int): maximum number of cells
        max_index (int, optional): abort with ceiling_exceeded when a created
            letter goes above this index

    Returns:
        ReversingGrid: the grid, with outputs filled when complete
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    u, v = tuple(u), tuple(v)
    grid = ReversingGrid(p.name, u, v)
    # entries are (letter, sign, path); sign -1 marks u-side letters
    word = [(u[k], -1, (k,)) for k in range(len(u) - 1, -1, -1)]
    word += [(v[k], 1, (k,)) for k in range(len(v))]
    pos = 0
    while True:
        while pos < len(word) - 1 and not (word[pos][1] < 0 < word[pos + 1][1]):
            pos += 1
        if pos >= len(word) - 1:
            break
        (s, _, row), (t, _, col) = word[pos], word[pos + 1]
        if len(grid.cells) >= budget:
            grid.status = BUDGET_EXCEEDED
            logger.warning(f"{p.name} reversing of {u} / {v} stopped at {budget} cells")
            return grid
        entry = complement(p, s, t)
        if entry is None:
            grid.status = STUCK
            logger.debug(f"{p.name}: no relation starts with g{s} and g{t}")
            return grid
        grid.cells.append(GridCell(row, col, s, t, entry.bottom, entry.right))
        if max_index is not None and max(entry.bottom + entry.right, default=0) > max_index:
            grid.status = CEILING_EXCEEDED
            return grid
        bottoms = [(letter, 1, path) for letter, path in zip(entry.bottom, _split(col, entry.bottom))]
        rights = [(letter, -1, path) for letter, path in zip(entry.right, _split(row, entry.right))]
        word[pos:pos + 2] = bottoms + rights[::-1]
        pos = max(0, pos - 1)
    grid.bottom_output = tuple(letter for letter, sign, _ in word if sign > 0)
    grid.right_output = tuple(letter for letter, sign, _ in reversed(word) if sign < 0)
    logger.debug(f"{p.name} reversing of {u} / {v}: {len(grid.cells)} cells")
    return grid


def _conclusive(grid):
    if grid.status == BUDGET_EXCEEDED:
        raise ReversingInconclusive(
            f"reversing {grid.left_input} against {grid.top_input} did not close within budget"
        )
    return grid


def equal_by_reversing(p, u, v, budget):
    """u == v iff reversing (u, v) closes with two empty outputs."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    max_index = None
    if not p.is_mirrored:
        if ceiling(u) != ceiling(v):
            return False
        max_index = ceiling(u)
    grid = _conclusive(reverse_right(p, u, v, budget, max_index))
    return grid.complete and not grid.right_output and not grid.bottom_output


def left_quotient(p, a, b, budget):
    """The word x with a x == b when a left-divides b, else None."""
    a, b = tuple(a), tuple(b)
    if len(a) > len(b):
        return None
    max_index = None if p.is_mirrored else ceiling(b)
    grid = _conclusive(reverse_right(p, a, b, budget, max_index))
    if grid.complete and not grid.right_output:
        return grid.bottom_output
    return None


def divides_left(p, a, b, budget):
    """
    Decide whether a left-divides b.

    Args:
        p (Presentation): P_F or P_H
        a (Word): candidate divisor
        b (Word): the word to divide
        budget (int): reversing cell budget

    Returns:
        bool: True when b = a x for some x

    Raises:
        ReversingInconclusive: the budget ran out before a decision
    """
    return left_quotient(p, a, b, budget) is not None


def right_lcm(p, a, b, budget):
    """
    a v1 for the output (u1, v1) of reversing (a, b); None when the grid gets
    stuck, meaning a and b have no common right multiple.
    """
    grid = _conclusive(reverse_right(p, a, b, budget))
    if grid.status == STUCK:
        return None
    return tuple(a) + grid.bottom_output


def left_lcm(p, a, b, budget):
    """Left lcm by right reversing reversed words in the mirrored presentation."""
    grid = _conclusive(reverse_right(mirrored(p), reverse(a), reverse(b), budget))
    if grid.status == STUCK:
        return None
    return reverse(grid.bottom_output) + tuple(a)


def left_lcm_F(a, b, budget):
    """
    Left lcm in F+, computed by left reversing.

    Args:
        a (Word): first word
        b (Word): second word
        budget (int): reversing cell budget

    Returns:
        Word | None: the left lcm, or None when no common left multiple exists
    """
    return left_lcm(P_F, a, b, budget)


def grid_is_consistent(p, grid, budget):
    """u v1 == v u1 for a complete grid, checked with the saturation oracle."""
    if not grid.complete:
        return False
    lhs = grid.left_input + grid.bottom_output
    rhs = grid.top_input + grid.right_output
    return oracle_equal(p, lhs, rhs, budget)


@dataclass
class DiamondReport:
    presentation: str
    window: int
    checked: int = 0
    undetermined: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return self.checked > 0 and not self.violations

    def violates(self, s, side_a, side_b):
        key = {tuple(side_a), tuple(side_b)}
        return any(g == s and {a, b} == key for g, a, b in self.violations)


def check_diamond(p, index_window, budget=2000, oracle_budget=100000):
    """
    For every generator s and relation w = w' with letters <= index_window,
    the grids from (s, w) and (s, w') must both be missing or both exist with
    equivalent outputs.
    """
    report = DiamondReport(p.name, index_window)
    for s in range(1, index_window + 1):
        for side_a, side_b in p.instances(index_window):
            report.checked += 1
            first = reverse_right(p, (s,), side_a, budget)
            second = reverse_right(p, (s,), side_b, budget)
            statuses = {first.status, second.status}
            if BUDGET_EXCEEDED in statuses:
                report.undetermined += 1
                continue
            if statuses == {STUCK}:
                continue
            if statuses != {COMPLETE}:
                report.violations.append((s, side_a, side_b))
                continue
            same = oracle_equal(p, first.right_output, second.right_output, oracle_budget) and oracle_equal(
                p, first.bottom_output, second.bottom_output, oracle_budget
            )
            if not same:
                report.violations.append((s, side_a, side_b))
    logger.info(
        f"{p.name} diamond window {index_window}: {report.checked} checked, "
        f"{len(report.violations)} violations, {report.undetermined} undetermined"
    )
    return report
