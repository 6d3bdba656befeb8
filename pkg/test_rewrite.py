"""
Test the rewrite systems E_F and E_H
"""
import pytest

from morphisms import random_words
from rewrite import (
    E_F,
    E_H,
    O_F,
    O_H,
    O_SIGMA,
    NotReducedError,
    append_reduce,
    check_local_confluence,
    contains_factor,
    critical_pairs,
    f_steps_between,
    gluing_exception,
    gluing_failures,
    is_reduced,
    mutated_h_system,
    reduce,
    reduce_with_trace,
    reduced_words,
    rewrite_once,
    system_for,
)
from words import Monoid, index_sum


@pytest.mark.parametrize(
    "sys, word, expected",
    [
        (E_H, (1, 2, 4), (2, 1, 2)),
        (E_H, (2, 1, 4), (2, 3, 1)),
        (E_H, (1, 4), (3, 1)),
        (E_H, (1, 3), (1, 3)),
        (E_F, (1, 3), (2, 1)),
        (E_F, (1, 3, 5), (3, 2, 1)),
        (E_H, (1, 2, 4, 5), (2, 3, 1, 2)),
        (E_F, (), ()),
    ],
)
def test_reduce(sys, word, expected):
    assert reduce(sys, word) == expected


def test_system_for():
    assert system_for(Monoid.F) is E_F
    assert system_for("H") is E_H


def test_trace_records_every_step():
    nf, trace = reduce_with_trace(E_F, (1, 3, 5))
    assert nf == (3, 2, 1)
    assert trace[0] == (0, (1, 3, 5), (2, 1, 5))
    assert trace[-1][2] == nf
    for _, before, after in trace:
        assert index_sum(after) < index_sum(before)


def test_strategies_reach_the_same_normal_form():
    for word in [(1, 3, 5, 7), (1, 2, 4, 5, 7, 8), (2, 5, 1, 4)]:
        for sys in (E_F, E_H):
            assert reduce(sys, word, "rightmost") == reduce(sys, word, "leftmost")
    with pytest.raises(ValueError):
        reduce(E_F, (1,), "middle")


def test_rewrite_once():
    assert rewrite_once(E_H, (1, 2, 4)) == {(2, 1, 2)}
    assert rewrite_once(E_F, (1, 3, 5)) == {(2, 1, 5), (1, 4, 3)}


def test_reducedness_by_obstructions():
    assert is_reduced(E_H, (2, 1, 2))
    assert not is_reduced(E_H, (1, 2, 4))
    assert not is_reduced(E_H, (1, 4))
    assert is_reduced(E_H, (1, 3))
    assert not is_reduced(E_F, (1, 3))
    assert contains_factor((2, 1, 1), O_SIGMA)
    assert not contains_factor((2, 1, 2), O_H + O_SIGMA)
    assert contains_factor((3, 5), O_F)


def test_reduce_output_is_reduced():
    for word in reduced_words(E_H, 3, 4):
        assert is_reduced(E_H, word)
    for word in [(1, 4, 2, 5), (3, 1, 6, 2, 7)]:
        assert is_reduced(E_H, reduce(E_H, word))


def test_critical_pairs_need_window():
    with pytest.raises(ValueError):
        critical_pairs(E_H, 7)


def test_critical_pairs_include_braid_overlap():
    sources = {pair.source for pair in critical_pairs(E_H, 10)}
    # g1 g4 and g4 g7 share one letter
    assert (1, 2, 5) not in sources
    assert (1, 4, 7) in sources


@pytest.mark.parametrize("sys", [E_F, E_H])
def test_local_confluence(sys):
    report = check_local_confluence(sys, 12)
    assert report.checked > 0
    assert report.passed


def test_mutated_braid_is_not_confluent():
    mutated = mutated_h_system()
    assert reduce(mutated, (1, 2, 4)) == (2, 1, 3)
    assert not check_local_confluence(mutated, 12).passed


def test_append_reduce_cases():
    assert append_reduce((2, 1), 4) == ((2,), (1,))
    assert append_reduce((1, 2), 4) == ((), (1, 2))
    assert append_reduce((2, 1), 2) == ((2, 1), ())
    assert append_reduce((), 5) == ((), ())
    with pytest.raises(NotReducedError):
        append_reduce((1, 4), 2)


def test_append_shape_matches_reduce():
    for w in reduced_words(E_H, 4, 4):
        for i in range(1, 9):
            w1, w2 = append_reduce(w, i)
            assert w1 + w2 == w
            assert reduce(E_H, w + (i,)) == w1 + (i - len(w2),) + w2


def test_f_steps_between():
    assert f_steps_between((1, 3), (2, 1)) == 1
    assert f_steps_between((1, 3, 5), (1, 3, 5)) == 0
    assert f_steps_between((1, 3, 5), (3, 2, 1)) is None


@pytest.mark.parametrize(
    "u, v, w, expected",
    [
        ((1,), (), (4,), "u=..g_i, w=g_j.., j>=i+3"),
        ((1,), (), (2, 4), "u=..g_i, w=g_{i+1}g_{i+3}.."),
        ((1, 2), (), (4,), "u=..g_ig_{i+1}, w=g_{i+3}.."),
        ((1,), (2,), (4,), "u=..g_i, v=g_{i+1}, w=g_{i+3}.."),
        ((2,), (1,), (2,), None),
    ],
)
def test_gluing_exception(u, v, w, expected):
    assert gluing_exception(u, v, w) == expected


def test_gluing_failures_are_classified():
    failures, mismatches = gluing_failures(2, 1, 2, 5)
    assert failures > 0
    assert mismatches == []


@pytest.mark.parametrize("sys", [E_F, E_H])
def test_strategies_agree_on_seeded_words(sys):
    for word in random_words(200, seed=17, max_length=10, max_index=8):
        assert reduce(sys, word, "rightmost") == reduce(sys, word, "leftmost")
