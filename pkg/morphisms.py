"""
The projection of H+ onto F+, the representation rho of H+ by self-maps of
the positive integers, and its polynomial deformation rho-tilde.
"""
import logging
from dataclasses import dataclass, field

import numpy as np
import sympy

import config
from presentation import P_H, match_relations, relation_instances
from rewrite import E_F, E_H, f_steps_between, reduce, rewrite_once
from words import height

logger = logging.getLogger(__name__)

t = sympy.Symbol("t")


class DimensionError(ValueError):
    """Raised when a truncated matrix is too small for the word."""


def project_pi(w):
    """theta_i -> tau_i on letter sequences."""
    return tuple(w)


@dataclass(frozen=True)
class EventuallyShiftMap:
    """
    Map of the positive integers given by a table on 1..W and k -> k - d
    beyond W. The table is trimmed on construction, so equal maps compare equal.
    """

    window: tuple
    tail_offset: int = 0

    def __post_init__(self):
        values = list(self.window)
        while values and values[-1] == len(values) - self.tail_offset:
            values.pop()
        object.__setattr__(self, "window", tuple(values))

    def __call__(self, k):
        if k < 1:
            raise ValueError(f"maps act on positive integers, got {k}")
        if k <= len(self.window):
            return self.window[k - 1]
        return k - self.tail_offset

    def compose(self, other):
        """self after other."""
        width = max(len(other.window), len(self.window) + other.tail_offset)
        return EventuallyShiftMap(
            tuple(self(other(k)) for k in range(1, width + 1)),
            self.tail_offset + other.tail_offset,
        )

    def preimages(self, value, up_to):
        return [k for k in range(1, up_to + 1) if self(k) == value]

    def is_injective_on(self, up_to):
        images = [self(k) for k in range(1, up_to + 1)]
        return len(set(images)) == len(images)


IDENTITY = EventuallyShiftMap((), 0)


def generator_map(i):
    """F_i: k for k <= i+1, i at i+2, k-1 beyond."""
    return EventuallyShiftMap(tuple(range(1, i + 2)) + (i,), 1)


def rho_of_word(w):
    """rho(uv) = rho(u) after rho(v)."""
    result = IDENTITY
    for letter in w:
        result = result.compose(generator_map(letter))
    return result


@dataclass
class RelationReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return self.checked > 0 and not self.failures


def rho_check_relations(index_window):
    """
    Check rho on every H relation instance with letters up to the window.

    Args:
        index_window (int): largest generator index of an instance

    Returns:
        RelationReport: instances checked and those with different images
    """
    report = RelationReport(f"rho window {index_window}")
    for side_a, side_b in relation_instances(P_H, index_window):
        report.checked += 1
        if rho_of_word(side_a) != rho_of_word(side_b):
            report.failures.append((side_a, side_b))
    return report


@dataclass
class TruncatedLinearMap:
    """N x N polynomial matrix acting on coordinate vectors indexed 1..N."""

    dimension: int
    matrix: sympy.Matrix

    @property
    def boundary_valid_rows(self):
        return range(1, self.dimension)

    def entry(self, row, col):
        return self.matrix[row - 1, col - 1]

    def evaluate(self, value):
        return TruncatedLinearMap(self.dimension, self.matrix.subs(t, value))

    def rows_equal(self, other):
        if self.dimension != other.dimension:
            raise DimensionError(f"dimensions differ: {self.dimension} and {other.dimension}")
        for row in self.boundary_valid_rows:
            difference = (self.matrix.row(row - 1) - other.matrix.row(row - 1)).applyfunc(sympy.expand)
            if any(value != 0 for value in difference):
                return False
        return True


def generator_matrix(i, dimension):
    """Truncated matrix of rho-tilde(theta_i); rows and columns are 1..dimension."""
    if i + 2 > dimension:
        raise DimensionError(f"generator {i} needs dimension >= {i + 2}")
    m = sympy.zeros(dimension, dimension)
    for k in range(1, dimension + 1):
        if k <= i:
            m[k - 1, k - 1] = 1
        elif k == i + 1:
            m[k - 1, i - 1] = t
            m[k - 1, i] = 1 - t
        elif k == i + 2:
            m[k - 1, i - 1] = 1 + t
            m[k - 1, i] = -t
        else:
            m[k - 1, k - 2] = 1
    return m


def rho_tilde_of_word(w, dimension, t_value=None):
    """
    Matrix of rho-tilde(w), ordered like rho: row k of the result at t = 0
    reads coordinate rho(w)(k), so rho-tilde(uv) = rho-tilde(v) rho-tilde(u).

    Args:
        w (Word): the word
        dimension (int): N, at least height(w) + 4
        t_value (int, optional): evaluate at this t instead of keeping t symbolic

    Returns:
        TruncatedLinearMap: the truncated matrix
    """
    if dimension < height(w) + 4:
        raise DimensionError(f"dimension {dimension} too small for {tuple(w)}, need {height(w) + 4}")
    result = sympy.eye(dimension)
    for letter in w:
        result = generator_matrix(letter, dimension) * result
    result = result.applyfunc(sympy.expand)
    linear_map = TruncatedLinearMap(dimension, result)
    return linear_map if t_value is None else linear_map.evaluate(t_value)


def coordinate_matrix(shift_map, dimension):
    """0/1 matrix whose row k selects coordinate shift_map(k)."""
    m = sympy.zeros(dimension, dimension)
    for k in range(1, dimension + 1):
        target = shift_map(k)
        if target <= dimension:
            m[k - 1, target - 1] = 1
    return TruncatedLinearMap(dimension, m)


def rho_tilde_relation_report(base_window=6, dimension=14):
    """
    Check both sides of every relation with smallest letter <= base_window
    against each other, symbolically in t. Experimental: reported, not asserted.
    """
    report = RelationReport(f"rho-tilde base {base_window} dimension {dimension}")
    for side_a, side_b in relation_instances(P_H, dimension - 4):
        if min(side_a + side_b) > base_window:
            continue
        report.checked += 1
        if not rho_tilde_of_word(side_a, dimension).rows_equal(rho_tilde_of_word(side_b, dimension)):
            report.failures.append((side_a, side_b))
    logger.info(f"{report.name}: {report.checked} relations, {len(report.failures)} not satisfied")
    return report


def random_relation_walks(samples, seed=config.SEED, length=8, max_index=5, p=P_H):
    """
    Pairs (u, v) where v comes from u by one relation of p, u random.

    Uses a numpy generator so runs are reproducible from the seed.
    """
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < samples:
        u = tuple(int(k) for k in rng.integers(1, max_index + 1, size=int(rng.integers(2, length + 1))))
        options = sorted(v for pos in range(len(u)) for v in match_relations(p, u, pos))
        if options:
            pairs.append((u, options[int(rng.integers(len(options)))]))
    return pairs


def random_words(samples, seed=config.SEED, max_length=10, max_index=8):
    """
    Seeded random words.

    Args:
        samples (int): number of words
        seed (int): numpy generator seed
        max_length (int): longest word, the shortest has one letter
        max_index (int): largest generator index

    Returns:
        list: the words
    """
    rng = np.random.default_rng(seed)
    return [
        tuple(int(k) for k in rng.integers(1, max_index + 1, size=int(rng.integers(1, max_length + 1))))
        for _ in range(samples)
    ]


def projection_step_bound_holds(samples=200, seed=config.SEED):
    """Every E_H step u -> v projects to one or two E_F steps from pi(u) to pi(v)."""
    for u in random_words(samples, seed, max_length=8, max_index=6):
        for v in rewrite_once(E_H, u):
            if f_steps_between(project_pi(u), project_pi(v)) not in (1, 2):
                logger.info(f"E_H step {u} -> {v} does not project to one or two E_F steps")
                return False
    return True


def pi_is_well_defined(samples=500, seed=config.SEED):
    """reduce_F(pi(u)) == reduce_F(pi(v)) whenever v is u after one H relation."""
    for u, v in random_relation_walks(samples, seed):
        if reduce(E_F, project_pi(u)) != reduce(E_F, project_pi(v)):
            logger.info(f"projection separates H-equivalent words {u} and {v}")
            return False
    return True
