"""
Relation schemas for the presentations of F+ and H+, relation application at
a position, and the finite congruence-class saturation oracle.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from words import Monoid, ceiling, reverse

logger = logging.getLogger(__name__)

STANDARD = "standard"
MIRRORED = "mirrored"

F_SWAP = "F_swap"
H_SWAP = "H_swap"
H_BRAID = "H_braid"


class BudgetExceeded(RuntimeError):
    """Raised when an operation needing a definite answer ran out of budget."""


@dataclass(frozen=True)
class RelationSchema:
    """
    A family of relations indexed by one or two parameters.

    F_swap:  g_j g_i = g_i g_{j+1}               (j >= i+1)
    H_swap:  g_j g_i = g_i g_{j+1}               (j >= i+2)
    H_braid: g_{i+1} g_i g_{i+1} = g_i g_{i+1} g_{i+3}
    """

    kind: str

    @property
    def length(self):
        return 3 if self.kind == H_BRAID else 2

    @property
    def gap(self):
        # least admissible j - i for the swap families
        return 1 if self.kind == F_SWAP else 2

    def instances(self, window):
        """All instances (side_a, side_b) whose letters are all <= window."""
        found = []
        if self.kind == H_BRAID:
            for i in range(1, window - 2):
                found.append(((i + 1, i, i + 1), (i, i + 1, i + 3)))
            return found
        for i in range(1, window + 1):
            for j in range(i + self.gap, window):
                found.append(((j, i), (i, j + 1)))
        return found

    def counterparts(self, factor):
        """
        Other sides of the instances having `factor` as one side.

        Args:
            factor (Word): a word of length self.length

        Returns:
            list[Word]: at most one entry per side that matches
        """
        if len(factor) != self.length:
            return []
        if self.kind == H_BRAID:
            x, y, z = factor
            if x == z == y + 1:
                return [(y, y + 1, y + 3)]
            if x >= 1 and y == x + 1 and z == x + 3:
                return [(x + 1, x, x + 1)]
            return []
        x, y = factor
        results = []
        if x >= y + self.gap:
            results.append((y, x + 1))
        if y - 1 >= x + self.gap:
            results.append((y - 1, x))
        return results


@dataclass(frozen=True)
class Presentation:
    """A positive presentation: monoid tag, orientation and relation schemas."""

    monoid: Monoid
    orientation: str = STANDARD
    schemas: tuple = field(default=())

    @property
    def name(self):
        prefix = "P_" + self.monoid.value
        return prefix if self.orientation == STANDARD else prefix + "_mirrored"

    @property
    def lengths(self):
        return sorted({schema.length for schema in self.schemas})

    @property
    def is_mirrored(self):
        return self.orientation == MIRRORED

    def counterparts(self, factor):
        if self.is_mirrored:
            factor = reverse(factor)
            return [reverse(c) for schema in self.schemas for c in schema.counterparts(factor)]
        return [c for schema in self.schemas for c in schema.counterparts(factor)]

    def instances(self, window):
        return _instances(self, window)


@lru_cache(maxsize=256)
def _instances(p, window):
    pairs = [pair for schema in p.schemas for pair in schema.instances(window)]
    if p.is_mirrored:
        pairs = [(reverse(a), reverse(b)) for a, b in pairs]
    return tuple(pairs)


def relation_instances(p, window):
    """All relation instances of p with every letter <= window."""
    return list(p.instances(window))


P_F = Presentation(Monoid.F, STANDARD, (RelationSchema(F_SWAP),))
P_H = Presentation(Monoid.H, STANDARD, (RelationSchema(H_SWAP), RelationSchema(H_BRAID)))


def standard(monoid):
    """
    The standard presentation of a monoid.

    Args:
        monoid (Monoid | str): F or H

    Returns:
        Presentation: P_F or P_H
    """
    return P_F if Monoid(monoid) == Monoid.F else P_H


def mirrored(p):
    """Presentation obtained by reversing both sides of every relation."""
    orientation = STANDARD if p.is_mirrored else MIRRORED
    return Presentation(p.monoid, orientation, p.schemas)


def match_relations(p, w, pos):
    """
    Words obtained from w by replacing the factor starting at pos by the
    other side of a relation instance.
    """
    if not 0 <= pos < len(w):
        raise IndexError(f"position {pos} out of range for a word of length {len(w)}")
    results = set()
    for length in p.lengths:
        factor = w[pos:pos + length]
        if len(factor) != length:
            continue
        for other in p.counterparts(factor):
            results.add(w[:pos] + other + w[pos + length:])
    return results


def neighbours(p, w):
    """Words one relation application away from w."""
    for pos in range(len(w)):
        yield from match_relations(p, w, pos)


@dataclass(frozen=True)
class CongruenceClass:
    representative: tuple
    members: frozenset
    truncated: bool = False

    def __len__(self):
        return len(self.members)

    def __contains__(self, word):
        return word in self.members

    def sorted_members(self):
        return sorted(self.members)


def class_saturate(p, w, budget):
    """
    Breadth-first closure of {w} under relation application in both directions.

    Args:
        p (Presentation): the presentation
        w (Word): starting word
        budget (int): maximum number of distinct words enqueued

    Returns:
        CongruenceClass: truncated is set when the budget ran out
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    return _saturate(p, tuple(w), budget)


@lru_cache(maxsize=8192)
def _saturate(p, w, budget):
    seen = {w}
    queue = deque([w])
    truncated = False
    while queue:
        current = queue.popleft()
        for nxt in neighbours(p, current):
            if nxt in seen:
                continue
            if len(seen) >= budget:
                truncated = True
                break
            seen.add(nxt)
            queue.append(nxt)
        if truncated:
            break
    if truncated:
        logger.warning(f"saturation of {w} in {p.name} truncated at {budget} words")
    elif len(seen) > ceiling(w) ** len(w):
        # finite-class bound; a violation means a broken schema
        raise AssertionError(f"class of {w} has {len(seen)} members, above ceiling^length")
    return CongruenceClass(w, frozenset(seen), truncated)


def _full_class(p, w, budget):
    cls = class_saturate(p, tuple(w), budget)
    if cls.truncated:
        raise BudgetExceeded(f"class of {tuple(w)} not enumerated within {budget} words")
    return cls


def oracle_equal(p, u, v, budget):
    """Decide u == v in the monoid by saturating the class of u."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    return v in _full_class(p, u, budget)


def oracle_divides_left(p, a, b, budget):
    """True iff some expression of b starts with an expression of a."""
    a, b = tuple(a), tuple(b)
    if len(a) > len(b):
        return False
    class_a = _full_class(p, a, budget)
    return any(member[:len(a)] in class_a for member in _full_class(p, b, budget).members)


def oracle_divides_right(p, a, b, budget):
    """True iff some expression of b ends with an expression of a."""
    a, b = tuple(a), tuple(b)
    if len(a) > len(b):
        return False
    class_a = _full_class(p, a, budget)
    cut = len(b) - len(a)
    return any(member[cut:] in class_a for member in _full_class(p, b, budget).members)


def is_right_complemented(p, window):
    """
    Check on generators <= window that no relation has both sides starting
    with the same letter and at most one relation starts with a given pair.
    """
    seen = {}
    for a, b in p.instances(window + 3):
        s, t = a[0], b[0]
        if max(s, t) > window:
            continue
        if s == t:
            logger.info(f"{p.name}: relation {a} = {b} starts with the same letter on both sides")
            return False
        key = frozenset((s, t))
        if key in seen:
            logger.info(f"{p.name}: pair {sorted(key)} covered by {seen[key]} and {(a, b)}")
            return False
        seen[key] = (a, b)
    return True
