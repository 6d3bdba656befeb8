"""
Test subword reversing: grids, equality, divisibility and lcms
"""
from itertools import product

import pytest

from morphisms import random_words
from presentation import P_F, P_H, mirrored
from reversing import (
    BUDGET_EXCEEDED,
    CEILING_EXCEEDED,
    COMPLETE,
    STUCK,
    ReversingInconclusive,
    check_diamond,
    complement,
    divides_left,
    equal_by_reversing,
    grid_is_consistent,
    left_lcm,
    left_lcm_F,
    left_quotient,
    reverse_right,
    right_lcm,
)


def test_complement_cells():
    entry = complement(P_H, 1, 2)
    assert (entry.bottom, entry.right) == ((2, 4), (1, 2))
    entry = complement(P_F, 1, 2)
    assert (entry.bottom, entry.right) == ((3,), (1,))
    assert complement(P_F, 3, 3).bottom == ()
    assert complement(mirrored(P_F), 1, 2) is None


def test_reverse_right_single_cell():
    grid = reverse_right(P_F, (1,), (2,), 100)
    assert grid.status == COMPLETE
    assert (grid.right_output, grid.bottom_output) == ((1,), (3,))
    assert len(grid.cells) == 1
    cell = grid.cells[0]
    assert (cell.left, cell.top, cell.bottom, cell.right) == (1, 2, (3,), (1,))


def test_reverse_right_grid_is_consistent():
    grid = reverse_right(P_H, (1,), (2, 1), 1000)
    assert grid.complete
    assert (grid.right_output, grid.bottom_output) == ((2,), (2, 4))
    assert grid_is_consistent(P_H, grid, 10000)


def test_reverse_right_budget_and_ceiling():
    grid = reverse_right(P_F, (1, 1, 1), (5, 5, 5), 1)
    assert grid.status == BUDGET_EXCEEDED
    grid = reverse_right(P_H, (2, 1), (1, 3), 100, max_index=3)
    assert grid.status == CEILING_EXCEEDED
    grid = reverse_right(mirrored(P_F), (1,), (2,), 100)
    assert grid.status == STUCK
    with pytest.raises(ValueError):
        reverse_right(P_F, (1,), (2,), 0)


def test_reverse_empty_inputs():
    grid = reverse_right(P_H, (), (1, 2), 10)
    assert grid.complete
    assert grid.bottom_output == (1, 2)
    assert grid.right_output == ()


@pytest.mark.parametrize(
    "p, u, v, expected",
    [
        (P_H, (1, 2, 4), (2, 1, 2), True),
        (P_H, (2, 1), (1, 3), False),
        (P_F, (2, 1), (1, 3), True),
        (P_H, (2, 4, 5, 7), (4, 2, 4, 5), True),
        (P_H, (1, 2, 4, 5), (2, 3, 1, 2), True),
        (P_H, (1, 2, 5, 7), (3, 5, 1, 2), True),
        (P_H, (1,), (1, 1), False),
        (P_H, (), (), True),
    ],
)
def test_equal_by_reversing(p, u, v, expected):
    assert equal_by_reversing(p, u, v, 10000) is expected


def test_equal_by_reversing_inconclusive():
    with pytest.raises(ReversingInconclusive):
        equal_by_reversing(P_F, (1, 3, 5, 7), (3, 2, 1, 7), 1)


def test_left_quotient_and_divides():
    assert left_quotient(P_H, (2,), (1, 2, 4), 1000) == (1, 2)
    assert left_quotient(P_H, (1, 2), (1, 2, 4), 1000) == (4,)
    assert left_quotient(P_H, (3,), (1, 2, 4), 1000) is None
    assert divides_left(P_F, (2,), (1, 3), 1000)
    assert not divides_left(P_F, (1, 3, 5), (1, 3), 1000)
    assert divides_left(P_H, (), (1,), 1000)


def test_right_lcm():
    assert right_lcm(P_H, (1,), (2,), 1000) == (1, 2, 4)
    assert right_lcm(P_F, (1,), (2,), 1000) == (1, 3)
    assert right_lcm(P_F, (2,), (2,), 1000) == (2,)


def test_left_lcm():
    assert left_lcm_F((1,), (4,), 1000) == (3, 1)
    assert left_lcm_F((1,), (2,), 1000) is None
    assert left_lcm(P_F, (3,), (3,), 1000) == (3,)


def test_right_diamond_holds():
    assert check_diamond(P_F, 6).passed
    assert check_diamond(P_H, 6).passed


def test_left_diamond_fails_for_h():
    report = check_diamond(mirrored(P_H), 6)
    assert not report.passed
    assert report.violates(6, (2, 1, 2), (4, 2, 1))


def test_f_grids_are_full_squares_without_empty_cells():
    words = [w for n in (1, 2) for w in product(range(1, 5), repeat=n)]
    squares = 0
    for u, v in product(words, repeat=2):
        grid = reverse_right(P_F, u, v, 100)
        assert grid.status == COMPLETE
        assert all(len(c.bottom) <= 1 and len(c.right) <= 1 for c in grid.cells)
        if all(c.bottom and c.right for c in grid.cells):
            assert len(grid.cells) == len(u) * len(v)
            squares += 1
    assert squares > 0


@pytest.mark.parametrize("p", [P_F, P_H])
def test_complete_grids_are_consistent(p):
    words = random_words(80, seed=23, max_length=3, max_index=5)
    complete = 0
    for u, v in zip(words[::2], words[1::2]):
        grid = reverse_right(p, u, v, 500)
        if grid.complete:
            complete += 1
            assert grid_is_consistent(p, grid, 100000)
    assert complete > 0
