"""
Garside elements, simple elements and their combinatorics.

Delta_n (and Delta_{n+0.5} in H+) words and normal forms, enumeration of the
left divisors of Delta_n, index and type of a simple element, the counting
triangle, and the permutation description of the divisors in F+.
"""
import logging
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np
import pandas as pd

import config
from presentation import BudgetExceeded, class_saturate, match_relations, oracle_divides_right, standard
from reversing import divides_left, left_quotient, reverse_right, right_lcm
from rewrite import E_F, O_H, O_SIGMA, NotReducedError, contains_factor, is_reduced, reduce, system_for
from words import Monoid, ceiling, format_word, height

logger = logging.getLogger(__name__)

TYPE_0 = "0"
TYPE_I = "I"
TYPE_II1 = "II1"
TYPE_II2 = "II2"

METHODS = ("forbidden_factors", "bfs_reversing", "oracle")


class NotSimpleError(ValueError):
    """Raised when a word is not the normal form of a suitable simple element."""


def split_rank(monoid, rank):
    """
    Split a rank into (n, half) where rank = n + 0.5 * half.

    Half ranks are only meaningful in H+.
    """
    value = float(rank)
    twice = round(2 * value)
    if abs(2 * value - twice) > 1e-9 or twice < 2:
        raise ValueError(f"rank must be an integer or half-integer >= 1, got {rank}")
    n, half = divmod(twice, 2)
    if half and Monoid(monoid) == Monoid.F:
        raise ValueError(f"half rank {rank} is only defined for H")
    return n, bool(half)


def delta_word(monoid, rank):
    """
    The defining word of Delta_rank.

    F: g1 g3 ... g_{2n-3}.
    H: increasing indices not divisible by 3, up to 3n-5 (rank n) or 3n-4 (rank n+0.5).
    """
    n, half = split_rank(monoid, rank)
    if Monoid(monoid) == Monoid.F:
        return tuple(range(1, 2 * n - 2, 2))
    limit = 3 * n - 4 if half else 3 * n - 5
    return tuple(k for k in range(1, limit + 1) if k % 3)


def delta_nf(monoid, rank):
    """Closed-form normal form of Delta_rank."""
    n, half = split_rank(monoid, rank)
    if Monoid(monoid) == Monoid.F:
        return tuple(range(n - 1, 0, -1))
    if half:
        blocks = [(k, k + 1) for k in range(n - 1, 0, -1)]
        return tuple(letter for block in blocks for letter in block)
    if n == 1:
        return ()
    blocks = [(k, k + 1) for k in range(n - 2, 0, -1)]
    return (n - 1,) + tuple(letter for block in blocks for letter in block)


def is_simple_nf(monoid, w):
    """True iff w is the normal form of a simple element."""
    w = tuple(w)
    if Monoid(monoid) == Monoid.F:
        return all(a > b for a, b in zip(w, w[1:]))
    return not contains_factor(w, O_H + O_SIGMA)


def index_of(monoid, a):
    """Least n such that a left-divides Delta_n, from the normal form."""
    a = tuple(a)
    if not is_simple_nf(monoid, a):
        raise NotSimpleError(f"{a} is not the normal form of a simple element of {Monoid(monoid).value}+")
    if not a:
        return 1
    if Monoid(monoid) == Monoid.F:
        return a[0] + 1
    return height(a) + 1


def least_delta_rank(monoid, a, budget=config.REVERSING_BUDGET):
    """Least n with a left-dividing Delta_n, found by reversing."""
    p = standard(monoid)
    for n in range(1, ceiling(a) + 3):
        if divides_left(p, a, delta_word(monoid, n), budget):
            return n
    raise NotSimpleError(f"{tuple(a)} divides no Delta_n up to rank {ceiling(a) + 2}")


def classify_type(a, n):
    """
    Type of a divisor of Delta_n in H+, dispatched on its normal form prefix.

    Args:
        a (SimpleRecord | Word): the element, as a record or a normal form
        n (int): the rank

    Returns:
        str: one of "0", "I", "II1", "II2"
    """
    nf = a.nf if isinstance(a, SimpleRecord) else tuple(a)
    if index_of(Monoid.H, nf) > n:
        raise NotSimpleError(f"{nf} does not left-divide Delta_{n}")
    if index_of(Monoid.H, nf) < n:
        return TYPE_0
    if n >= 3 and nf[:3] == (n - 1, n - 2, n - 1):
        return TYPE_II2
    if n >= 3 and nf[:2] == (n - 2, n - 1):
        return TYPE_II1
    return TYPE_I


def type_memberships(a, n, budget=config.REVERSING_BUDGET):
    """The sets of the four-way partition containing a, tested by divisibility."""
    p = standard(Monoid.H)
    a = tuple(a)
    found = set()
    if divides_left(p, a, delta_word(Monoid.H, n - 1), budget):
        found.add(TYPE_0)
    if n >= 2:
        quotient = left_quotient(p, (n - 1,), a, budget)
        if quotient is not None and divides_left(p, quotient, delta_word(Monoid.H, n - 1), budget):
            found.add(TYPE_I)
    if n >= 3:
        quotient = left_quotient(p, (n - 2, n - 1), a, budget)
        if quotient is not None and divides_left(p, quotient, delta_word(Monoid.H, n - 1.5), budget):
            found.add(TYPE_II1)
        quotient = left_quotient(p, (n - 1, n - 2, n - 1), a, budget)
        if quotient is not None and divides_left(p, (n - 2,) + quotient, delta_word(Monoid.H, n - 1), budget):
            found.add(TYPE_II2)
    return found


@dataclass(frozen=True, order=True)
class SimpleRecord:
    length: int
    nf: tuple
    monoid: Monoid = field(compare=False)
    index: int = field(compare=False)
    type_tag: str = field(default=None, compare=False)


def simple_record(monoid, nf, n=None):
    """
    Tabulation record of a simple element.

    Args:
        monoid (Monoid): F or H
        nf (Word): normal form of the simple element
        n (int, optional): rank used for the type tag; H gets its type,
            F the set of its letters

    Returns:
        SimpleRecord: length, normal form, monoid, index and tag
    """
    nf = tuple(nf)
    tag = None
    if n is not None:
        if Monoid(monoid) == Monoid.H:
            tag = classify_type(nf, n)
        else:
            tag = "{" + ",".join(str(k) for k in sorted(nf)) + "}"
    return SimpleRecord(len(nf), nf, Monoid(monoid), index_of(monoid, nf), tag)


def _obstruction_free_words(monoid, n):
    if Monoid(monoid) == Monoid.F:
        letters = range(1, n)
        words = [()]
        for k in letters:
            words += [(k,) + w for w in words]
        return words
    forbidden = O_H + O_SIGMA
    max_length = max(2 * n - 3, 0)
    found, stack = [], [()]
    while stack:
        word = stack.pop()
        found.append(word)
        if len(word) == max_length:
            continue
        for k in range(1, n):
            candidate = word + (k,)
            if not forbidden.matches(candidate[-2:]) and not forbidden.matches(candidate[-3:]):
                stack.append(candidate)
    return found


def divisors_of(monoid, word, budget=config.REVERSING_BUDGET):
    """
    Normal forms of all left divisors of the element represented by word.

    Breadth-first over lengths; each divisor a keeps a quotient x with
    a x == word, so a g is a divisor iff g left-divides x.
    """
    p, sys = standard(monoid), system_for(monoid)
    word = tuple(word)
    top = max(ceiling(word), 1)
    quotients = {(): reduce(sys, word)}
    frontier = [()]
    while frontier:
        next_frontier = []
        for nf in frontier:
            quotient = quotients[nf]
            for g in range(1, top + 1):
                rest = left_quotient(p, (g,), quotient, budget)
                if rest is None:
                    continue
                extended = reduce(sys, nf + (g,))
                if extended not in quotients:
                    quotients[extended] = reduce(sys, rest)
                    next_frontier.append(extended)
        frontier = next_frontier
    return set(quotients)


def _oracle_divisors(monoid, n, budget):
    sys = system_for(monoid)
    cls = class_saturate(standard(monoid), delta_word(monoid, n), budget)
    if cls.truncated:
        raise BudgetExceeded(f"class of Delta_{n} not enumerated within {budget} words")
    return {reduce(sys, member[:cut]) for member in cls.members for cut in range(len(member) + 1)}


def enumerate_divisors(monoid, n, method="forbidden_factors", budget=None):
    """
    Left divisors of Delta_n as simple records, sorted by (length, normal form).

    Args:
        monoid (Monoid): F or H
        n (int): rank >= 1
        method (str): forbidden_factors, bfs_reversing or oracle
        budget (int, optional): cells for reversing, words for saturation

    Returns:
        list[SimpleRecord]: one record per divisor
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    if method == "forbidden_factors":
        nfs = set(_obstruction_free_words(monoid, n))
    elif method == "bfs_reversing":
        nfs = divisors_of(monoid, delta_word(monoid, n), budget or config.REVERSING_BUDGET)
    elif method == "oracle":
        nfs = _oracle_divisors(monoid, n, budget or config.SATURATION_BUDGET)
    else:
        raise ValueError(f"unknown method {method!r}, expected one of {', '.join(METHODS)}")
    records = sorted(simple_record(monoid, nf, n) for nf in nfs)
    logger.info(f"{Monoid(monoid).value}: {len(records)} divisors of Delta_{n} by {method}")
    return records


def simples_frame(records):
    """Tabulate simple records as a DataFrame."""
    return pd.DataFrame(
        [
            {"nf": format_word(r.nf), "length": r.length, "index": r.index, "type": r.type_tag}
            for r in records
        ],
        columns=["nf", "length", "index", "type"],
    )


@dataclass
class CountTriangle:
    """N[n][l] for 2 <= n <= n_max, 0 <= l <= 2n-3."""

    rows: dict = field(default_factory=dict)

    def entry(self, n, ell):
        row = self.rows.get(n, [])
        return row[ell] if 0 <= ell < len(row) else 0

    def row_sum(self, n):
        return sum(self.rows[n])

    def is_palindromic(self, n):
        return self.rows[n] == self.rows[n][::-1]

    def central_column(self):
        return [self.entry(n, n - 2) for n in sorted(self.rows)]

    def csv_lines(self):
        return [",".join(str(x) for x in self.rows[n]) for n in sorted(self.rows)]


def count_triangle(n_max):
    """Rows of N[n][l] = N[n-1][l] + N[n-1][l-1] + N[n-1][l-2], starting from (1, 1)."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    triangle = CountTriangle({2: [1, 1]})
    for n in range(3, n_max + 1):
        triangle.rows[n] = [
            triangle.entry(n - 1, ell) + triangle.entry(n - 1, ell - 1) + triangle.entry(n - 1, ell - 2)
            for ell in range(2 * n - 2)
        ]
    return triangle


def generating_coefficients(n):
    """Coefficients of (1 + x)(1 + x + x^2)^(n-2), constant term first."""
    coefficients = np.array([1, 1], dtype=np.int64)
    for _ in range(n - 2):
        coefficients = np.convolve(coefficients, np.array([1, 1, 1], dtype=np.int64))
    return [int(c) for c in coefficients]


def count_index_exactly(n):
    """Number of simple elements of index exactly n in H+."""
    if n < 2:
        return 1 if n == 1 else 0
    triangle = count_triangle(max(n, 2))
    previous = triangle.row_sum(n - 1) if n > 2 else 1
    return triangle.row_sum(n) - previous


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., size}, stored as its list of images."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def inverse(self):
        inv = [0] * self.size
        for i, image in enumerate(self.images, 1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other):
        """self after other."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.size + 1)))

    @classmethod
    def identity(cls, size):
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def transposition(cls, p, size):
        images = list(range(1, size + 1))
        images[p - 1], images[p] = images[p], images[p - 1]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text):
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as e:
            raise ValueError(f"bad permutation {text!r}: {str(e)}") from None


def perm_to_word(f):
    """
    The expression w_f of Delta_{size+1} attached to the permutation f.

    Letter p is 2 f^-1(p) - 1 - #{i < f^-1(p) : f(i) > p}.
    """
    inv = f.inverse()
    letters = []
    for p in range(1, f.size + 1):
        position = inv(p)
        inversions = sum(1 for i in range(1, position) if f(i) > p)
        letters.append(2 * position - 1 - inversions)
    return tuple(letters)


def permutation_action_holds(n):
    """
    Applying the relation at letters p, p+1 of w_f gives w_{s_p f}, for all f
    permuting {1, ..., n-1} and 1 <= p <= n-2.
    """
    size = n - 1
    for images in permutations(range(1, size + 1)):
        f = Permutation(images)
        word = perm_to_word(f)
        for p in range(1, size):
            expected = perm_to_word(Permutation.transposition(p, size).compose(f))
            if match_relations(standard(Monoid.F), word, p - 1) != {expected}:
                logger.info(f"permutation action fails for f={images}, p={p}")
                return False
    return True


def greedy_decompose_F(a):
    """Split an E_F-reduced word into its maximal strictly decreasing factors."""
    a = tuple(a)
    if not is_reduced(E_F, a):
        raise NotReducedError(f"{a} is not E_F-reduced")
    factors = []
    for letter in a:
        if factors and factors[-1][-1] > letter:
            factors[-1].append(letter)
        else:
            factors.append([letter])
    return [tuple(factor) for factor in factors]


@dataclass
class BijectionReport:
    n: int
    ell: int
    maps: dict = field(default_factory=dict)
    targets: dict = field(default_factory=dict)
    sources: dict = field(default_factory=dict)

    def injective(self, name):
        return len(set(self.maps[name].values())) == len(self.maps[name])

    def bijective(self, name):
        return self.injective(name) and set(self.maps[name].values()) == self.targets[name]

    @property
    def passed(self):
        return all(self.bijective(name) for name in self.maps)


def bijection_maps(n, ell, budget=config.REVERSING_BUDGET):
    """
    The maps identity, a -> g_{n-1} a and the two-case type II map, as
    explicit tables from the divisors of Delta_{n-1} onto the type sets of
    the divisors of Delta_n of length ell.
    """
    if n < 3:
        raise ValueError("bijection maps need n >= 3")
    p, sys = standard(Monoid.H), system_for(Monoid.H)
    previous = [r.nf for r in enumerate_divisors(Monoid.H, n - 1)]
    current = enumerate_divisors(Monoid.H, n)
    by_type = {TYPE_0: set(), TYPE_I: set(), TYPE_II1: set(), TYPE_II2: set()}
    for record in current:
        if record.length == ell:
            by_type[record.type_tag].add(record.nf)
    report = BijectionReport(n, ell)
    half = delta_word(Monoid.H, n - 1.5)

    def type_two(a):
        if divides_left(p, a, half, budget):
            return reduce(sys, (n - 2, n - 1) + a)
        b = left_quotient(p, (n - 2,), a, budget)
        if b is None:
            raise NotSimpleError(f"{a} neither divides Delta_{n - 1.5} nor starts with g{n - 2}")
        return reduce(sys, (n - 1, n - 2, n - 1) + b)

    report.sources = {
        "F0": [a for a in previous if len(a) == ell],
        "FI": [a for a in previous if len(a) == ell - 1],
        "FII": [a for a in previous if len(a) == ell - 2],
    }
    report.maps["F0"] = {a: a for a in report.sources["F0"]}
    report.maps["FI"] = {a: reduce(sys, (n - 1,) + a) for a in report.sources["FI"]}
    report.maps["FII"] = {a: type_two(a) for a in report.sources["FII"]}
    report.targets = {
        "F0": by_type[TYPE_0],
        "FI": by_type[TYPE_I],
        "FII": by_type[TYPE_II1] | by_type[TYPE_II2],
    }
    return report


def delta_crossing(monoid, i, rank, budget=config.REVERSING_BUDGET):
    """
    Right-reverse g_i against the word of Delta_rank.

    Returns:
        tuple: (right output, bottom output), or None when the grid does not close
    """
    grid = reverse_right(standard(monoid), (i,), delta_word(monoid, rank), budget)
    if not grid.complete:
        return None
    return grid.right_output, grid.bottom_output


def delta_crossing_holds(n_max, budget=config.REVERSING_BUDGET):
    """
    F: g_i crosses Delta_n unchanged as g_(i+n-1) for n <= i <= n + 2.
    H: g_(n-1) crosses Delta_(n-1) as g_(3n-7) g_(3n-5) over Delta_(n-0.5).
    """
    sys = system_for(Monoid.H)
    for n in range(2, n_max + 1):
        for i in range(n, n + 3):
            if delta_crossing(Monoid.F, i, n, budget) != ((i + n - 1,), delta_word(Monoid.F, n)):
                logger.info(f"g{i} does not cross Delta_{n} in F")
                return False
        if n < 3:
            continue
        crossing = delta_crossing(Monoid.H, n - 1, n - 1, budget)
        if crossing is None or crossing[0] != (3 * n - 7, 3 * n - 5):
            logger.info(f"g{n - 1} does not cross Delta_{n - 1} in H")
            return False
        if reduce(sys, crossing[1]) != delta_nf(Monoid.H, n - 0.5):
            return False
    return True


def length_counts(records, n):
    """Number of records of each length 0 .. 2n-3, by grouping the records frame."""
    sizes = simples_frame(records).groupby("length").size()
    return [int(sizes.get(ell, 0)) for ell in range(2 * n - 2)]


def strip_type_prefix(nf, n):
    """Remove the type prefix of an index-n normal form; returns (type, rest)."""
    tag = classify_type(nf, n)
    cut = {TYPE_0: 0, TYPE_I: 1, TYPE_II1: 2, TYPE_II2: 3}[tag]
    return tag, tuple(nf[cut:])


def non_garside_witness(budget=config.SATURATION_BUDGET):
    """g2 g4 right-divides Delta_3 in H+ yet is not simple."""
    right_divides = oracle_divides_right(standard(Monoid.H), (2, 4), delta_word(Monoid.H, 3), budget)
    return right_divides and not is_simple_nf(Monoid.H, (2, 4))


def expression_split_holds(n, budget=config.SATURATION_BUDGET):
    """
    Every expression of Delta_n in H+ is w1 g_k w2 with k = n + |w1| - 1,
    w1 w2 == Delta_{n-0.5} and w1 g_k == g_{n-1} w1.
    """
    sys = system_for(Monoid.H)
    target = delta_nf(Monoid.H, n - 0.5)
    for member in class_saturate(standard(Monoid.H), delta_word(Monoid.H, n), budget).members:
        if not any(
            member[cut] == n + cut - 1
            and reduce(sys, member[:cut] + member[cut + 1:]) == target
            and reduce(sys, member[:cut + 1]) == reduce(sys, (n - 1,) + member[:cut])
            for cut in range(len(member))
        ):
            logger.info(f"expression {member} of Delta_{n} has no admissible split")
            return False
    return True


def f_right_divisors_are_simple(n, budget=config.SATURATION_BUDGET):
    """Every right divisor of a divisor of Delta_n in F+ is simple."""
    for record in enumerate_divisors(Monoid.F, n):
        cls = class_saturate(standard(Monoid.F), record.nf, budget)
        for member in cls.members:
            for cut in range(len(member) + 1):
                if not is_simple_nf(Monoid.F, reduce(E_F, member[cut:])):
                    logger.info(f"right divisor {member[cut:]} of {record.nf} is not simple")
                    return False
    return True


def f_lcms_divide_delta(n, budget=config.REVERSING_BUDGET):
    """The right lcm of two divisors of Delta_n in F+ divides Delta_n."""
    p = standard(Monoid.F)
    delta = delta_word(Monoid.F, n)
    nfs = [r.nf for r in enumerate_divisors(Monoid.F, n)]
    for a in nfs:
        for b in nfs:
            lcm = right_lcm(p, a, b, budget)
            if lcm is None or not divides_left(p, lcm, delta, budget):
                logger.info(f"lcm of {a} and {b} does not divide Delta_{n}")
                return False
    return True
