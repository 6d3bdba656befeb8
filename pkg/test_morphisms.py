"""
Test the projection pi, the representation rho and its deformation rho-tilde
"""
import pytest
import sympy

from morphisms import (
    IDENTITY,
    DimensionError,
    EventuallyShiftMap,
    coordinate_matrix,
    generator_map,
    generator_matrix,
    pi_is_well_defined,
    project_pi,
    projection_step_bound_holds,
    random_relation_walks,
    random_words,
    rho_check_relations,
    rho_of_word,
    rho_tilde_of_word,
    rho_tilde_relation_report,
    t,
)
from presentation import P_F, P_H, match_relations
from rewrite import E_F, E_H, f_steps_between, reduce


def test_projection_is_not_injective():
    assert project_pi((2, 1)) == (2, 1)
    assert reduce(E_F, project_pi((2, 1))) == reduce(E_F, project_pi((1, 3)))
    assert reduce(E_H, (2, 1)) != reduce(E_H, (1, 3))


def test_projection_respects_relations():
    assert pi_is_well_defined(samples=60, seed=7)


def test_projection_of_one_rewrite_step():
    assert f_steps_between(project_pi((1, 2, 4)), project_pi((2, 1, 2))) == 2
    assert f_steps_between(project_pi((1, 4)), project_pi((3, 1))) == 1
    assert projection_step_bound_holds(samples=100, seed=13)


def test_random_words_respect_bounds():
    words = random_words(50, seed=2, max_length=4, max_index=3)
    assert words == random_words(50, seed=2, max_length=4, max_index=3)
    assert all(1 <= len(w) <= 4 and max(w) <= 3 for w in words)


def test_random_relation_walks_are_reproducible():
    first = random_relation_walks(10, seed=3)
    assert first == random_relation_walks(10, seed=3)
    for u, v in first:
        assert any(v in match_relations(P_H, u, pos) for pos in range(len(u)))
    for u, v in random_relation_walks(5, seed=3, p=P_F):
        assert reduce(E_F, u) == reduce(E_F, v)


def test_generator_map():
    f1 = generator_map(1)
    assert [f1(k) for k in range(1, 7)] == [1, 2, 1, 3, 4, 5]
    f2 = generator_map(2)
    assert [f2(k) for k in range(1, 7)] == [1, 2, 3, 2, 4, 5]
    with pytest.raises(ValueError):
        f1(0)


def test_eventually_shift_map_trims_its_table():
    assert EventuallyShiftMap((1, 2, 3), 0) == IDENTITY
    assert EventuallyShiftMap((1, 2, 1, 3), 1) == generator_map(1)


def test_compose_is_function_composition():
    f1, f2 = generator_map(1), generator_map(2)
    composed = f1.compose(f2)
    assert all(composed(k) == f1(f2(k)) for k in range(1, 12))
    assert composed.tail_offset == 2
    assert rho_of_word((1, 2)) == composed
    assert rho_of_word(()) == IDENTITY


def test_rho_satisfies_relations():
    report = rho_check_relations(10)
    assert report.checked > 0
    assert report.passed


def test_rho_collision():
    assert rho_of_word((1, 1, 2)) == rho_of_word((1, 2, 3))
    assert reduce(E_H, (1, 1, 2)) != reduce(E_H, (1, 2, 3))
    assert not rho_of_word((1, 1)).is_injective_on(5)
    assert rho_of_word((1,)).preimages(1, 6) == [1, 3]


def test_generator_matrix():
    m = generator_matrix(1, 5)
    assert m[1, 0] == t and m[1, 1] == 1 - t
    assert m[2, 0] == 1 + t and m[2, 1] == -t
    assert m[3, 2] == 1
    with pytest.raises(DimensionError):
        generator_matrix(4, 5)


def test_rho_tilde_needs_room():
    with pytest.raises(DimensionError):
        rho_tilde_of_word((3,), 6)


@pytest.mark.parametrize("word", [(1,), (2, 1), (1, 2, 4), (3, 1, 2), (1, 1, 2)])
def test_rho_tilde_at_zero_is_rho(word):
    dimension = max(word) + 6
    assert rho_tilde_of_word(word, dimension, 0).rows_equal(coordinate_matrix(rho_of_word(word), dimension))


def test_rho_tilde_relation_example():
    assert rho_tilde_of_word((3, 1), 9).rows_equal(rho_tilde_of_word((1, 4), 9))


def test_rho_tilde_separates_rho_collision():
    a, b = (rho_tilde_of_word(w, 10) for w in ((1, 1, 2), (1, 2, 3)))
    assert not a.rows_equal(b)
    assert not a.evaluate(2).rows_equal(b.evaluate(2))
    # the pair still coincides at t = 1
    assert a.evaluate(1).rows_equal(b.evaluate(1))


def test_rows_equal_checks_dimension():
    with pytest.raises(DimensionError):
        rho_tilde_of_word((1,), 6).rows_equal(rho_tilde_of_word((1,), 7))


def test_rho_tilde_entries_are_polynomials():
    linear_map = rho_tilde_of_word((1, 2), 8)
    for row in range(1, 9):
        for col in range(1, 9):
            assert sympy.Poly(linear_map.entry(row, col), t).degree() <= 2


def test_rho_tilde_relation_report_runs():
    report = rho_tilde_relation_report(base_window=2, dimension=10)
    assert report.checked > 0
