"""
Test relation schemas, relation matching and the saturation oracle
"""
import pytest

from presentation import (
    P_F,
    P_H,
    BudgetExceeded,
    class_saturate,
    is_right_complemented,
    match_relations,
    mirrored,
    oracle_divides_left,
    oracle_divides_right,
    oracle_equal,
    relation_instances,
    standard,
)
from words import Monoid, ceiling


def test_standard_presentations():
    assert standard(Monoid.F) is P_F
    assert standard("H") is P_H
    assert P_F.lengths == [2]
    assert P_H.lengths == [2, 3]
    assert P_H.name == "P_H"
    assert mirrored(P_H).name == "P_H_mirrored"
    assert mirrored(mirrored(P_H)) == P_H


def test_instances_within_window():
    swaps = P_F.instances(3)
    assert ((2, 1), (1, 3)) in swaps
    assert all(max(a + b) <= 3 for a, b in swaps)
    assert ((2, 1, 2), (1, 2, 4)) in P_H.instances(4)
    # g2 g1 = g1 g3 is an F relation only
    assert ((2, 1), (1, 3)) not in P_H.instances(6)
    assert ((3, 1), (1, 4)) in P_H.instances(6)


def test_mirrored_instances_are_reversed():
    assert ((2, 1, 2), (4, 2, 1)) in mirrored(P_H).instances(6)


def test_match_relations():
    assert match_relations(P_H, (1, 2, 4), 0) == {(2, 1, 2)}
    assert match_relations(P_H, (2, 1, 2), 0) == {(1, 2, 4)}
    assert match_relations(P_F, (5, 2, 1), 1) == {(5, 1, 3)}
    assert match_relations(P_F, (1, 1), 0) == set()
    with pytest.raises(IndexError):
        match_relations(P_F, (1, 2), 2)


def test_class_saturate():
    cls = class_saturate(P_H, (1, 2, 4), 100)
    assert set(cls.members) == {(1, 2, 4), (2, 1, 2)}
    assert not cls.truncated
    assert (2, 1, 2) in cls
    assert cls.sorted_members() == [(1, 2, 4), (2, 1, 2)]
    assert len(class_saturate(P_F, (1, 3), 100)) == 2


def test_class_saturate_truncates():
    cls = class_saturate(P_F, (1, 3, 5, 7), 3)
    assert cls.truncated
    assert len(cls) == 3
    with pytest.raises(ValueError):
        class_saturate(P_F, (1,), 0)


def test_oracle_equal():
    assert oracle_equal(P_F, (2, 1), (1, 3), 100)
    assert not oracle_equal(P_H, (2, 1), (1, 3), 100)
    assert not oracle_equal(P_H, (1,), (1, 2), 100)
    with pytest.raises(BudgetExceeded):
        oracle_equal(P_F, (1, 3, 5, 7), (7, 5, 3, 1), 2)


def test_oracle_divisibility():
    assert oracle_divides_left(P_H, (2,), (1, 2, 4), 100)
    assert not oracle_divides_left(P_H, (1, 1), (1, 2, 4), 100)
    assert oracle_divides_right(P_H, (1, 2), (1, 2, 4), 100)
    assert oracle_divides_right(P_H, (2, 4), (2, 1, 2), 100)
    assert not oracle_divides_right(P_H, (1, 1), (1, 2, 4), 100)


def test_right_complemented():
    assert is_right_complemented(P_F, 12)
    assert is_right_complemented(P_H, 12)


@pytest.mark.parametrize("p", [P_F, P_H])
def test_ceiling_is_invariant_under_relations(p):
    contexts = [((), ()), ((3,), ()), ((), (1, 5)), ((6, 2), (4,))]
    for lhs, rhs in relation_instances(p, 7):
        for prefix, suffix in contexts:
            assert ceiling(prefix + lhs + suffix) == ceiling(prefix + rhs + suffix)
