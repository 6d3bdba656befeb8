"""
Test word parsing, formatting and the index statistics
"""
import pytest

from morphisms import random_relation_walks
from presentation import P_F, P_H
from rewrite import E_F, E_H, reduce
from words import EMPTY, Monoid, WordError, ceiling, format_word, height, index_sum, make_word, parse_word, reverse, shift


@pytest.mark.parametrize(
    "text, expected",
    [
        ("g1 g2 g4", (1, 2, 4)),
        ("e", EMPTY),
        ("  g10   g3 ", (10, 3)),
    ],
)
def test_parse_word(text, expected):
    assert parse_word(text) == expected


@pytest.mark.parametrize("text", ["", "   ", "g0", "g1 x2", "g-1", "1 2", "e g1"])
def test_parse_word_rejects(text):
    with pytest.raises(WordError):
        parse_word(text)


def test_word_error_is_value_error():
    assert issubclass(WordError, ValueError)


def test_format_word():
    assert format_word((2, 1, 2)) == "g2 g1 g2"
    assert format_word(()) == "e"
    assert parse_word(format_word((5, 3, 9))) == (5, 3, 9)


def test_make_word_checks_indices():
    assert make_word([3, 1]) == (3, 1)
    with pytest.raises(WordError):
        make_word([2, 0])


@pytest.mark.parametrize(
    "word, expected",
    [
        ((), 0),
        ((1,), 1),
        ((1, 2, 4, 5), 5),
        ((2, 1), 3),
        ((1, 3), 3),
        ((2, 1, 2), 4),
        ((1, 2, 4), 4),
    ],
)
def test_ceiling(word, expected):
    assert ceiling(word) == expected


def test_height_and_index_sum():
    assert height(()) == 0
    assert height((2, 7, 3)) == 7
    assert index_sum((2, 7, 3)) == 12


def test_shift_and_reverse():
    assert shift((1, 3)) == (2, 4)
    assert shift((1, 3), 3) == (4, 6)
    assert reverse((1, 2, 4)) == (4, 2, 1)
    with pytest.raises(WordError):
        shift((1,), 0)


def test_monoid_parse():
    assert Monoid.parse("h") == Monoid.H
    assert Monoid.parse("F") == Monoid.F
    with pytest.raises(WordError):
        Monoid.parse("G")


@pytest.mark.parametrize("p, sys", [(P_F, E_F), (P_H, E_H)])
def test_shift_preserves_equivalence(p, sys):
    for u, v in random_relation_walks(100, seed=11, p=p):
        for d in (1, 3):
            assert reduce(sys, shift(u, d)) == reduce(sys, shift(v, d))
