"""
Convergent rewrite systems E_F and E_H: one-step rewriting, normal forms,
reducedness through forbidden factors, and local confluence checking.
"""
import logging
from dataclasses import dataclass, field
from itertools import product

from words import Monoid, index_sum

logger = logging.getLogger(__name__)

SWAP = "swap"
BRAID = "braid"


class NotReducedError(ValueError):
    """Raised when an operation expects a reduced word."""


@dataclass(frozen=True)
class ObstructionSet:
    """
    Forbidden factor families, each given by a pattern kind:

    gap2       g_a g_b, b >= a+2        (left sides of the F rules)
    gap3       g_a g_b, b >= a+3
    braid_lhs  g_a g_{a+1} g_{a+3}
    square     g_a g_a
    skip1      g_a g_{a+2}
    return     g_a g_{a+1} g_a
    staircase  g_a g_{a+1} g_{a+2}
    """

    name: str
    patterns: tuple

    def matches(self, factor):
        return any(_PATTERNS[kind](factor) for kind in self.patterns)

    def __add__(self, other):
        return ObstructionSet(f"{self.name}+{other.name}", self.patterns + other.patterns)


_PATTERNS = {
    "gap2": lambda f: len(f) == 2 and f[1] >= f[0] + 2,
    "gap3": lambda f: len(f) == 2 and f[1] >= f[0] + 3,
    "braid_lhs": lambda f: len(f) == 3 and f[1] == f[0] + 1 and f[2] == f[0] + 3,
    "square": lambda f: len(f) == 2 and f[0] == f[1],
    "skip1": lambda f: len(f) == 2 and f[1] == f[0] + 2,
    "return": lambda f: len(f) == 3 and f[1] == f[0] + 1 and f[2] == f[0],
    "staircase": lambda f: len(f) == 3 and f[1] == f[0] + 1 and f[2] == f[0] + 2,
}

O_F = ObstructionSet("O_F", ("gap2",))
O_H = ObstructionSet("O", ("gap3", "braid_lhs"))
O_SIGMA = ObstructionSet("O_Sigma", ("square", "skip1", "return", "staircase"))


def contains_factor(w, obs):
    """True iff some factor of length 2 or 3 of w matches a pattern of obs."""
    for pos in range(len(w) - 1):
        if obs.matches(w[pos:pos + 2]) or obs.matches(w[pos:pos + 3]):
            return True
    return False


@dataclass(frozen=True)
class RewriteSystem:
    """
    Rule schemas in matching order.

    swap:  g_a g_b -> g_{b-1} g_a  for b >= a + swap_gap
    braid: g_a g_{a+1} g_{a+3} -> braid_target(a)
    """

    monoid: Monoid
    name: str
    swap_gap: int
    braid_shift: tuple = None
    obstructions: ObstructionSet = field(default=None)

    @property
    def rules(self):
        return (SWAP, BRAID) if self.braid_shift else (SWAP,)

    def lhs_length(self, rule):
        return 3 if rule == BRAID else 2

    def apply(self, rule, w, pos):
        """Result of applying `rule` at `pos`, or None when it does not match."""
        if rule == SWAP:
            factor = w[pos:pos + 2]
            if len(factor) == 2 and factor[1] >= factor[0] + self.swap_gap:
                return w[:pos] + (factor[1] - 1, factor[0]) + w[pos + 2:]
            return None
        factor = w[pos:pos + 3]
        if len(factor) == 3 and factor[1] == factor[0] + 1 and factor[2] == factor[0] + 3:
            a = factor[0]
            return w[:pos] + tuple(a + d for d in self.braid_shift) + w[pos + 3:]
        return None

    def lhs_instances(self, rule, window):
        """Left sides of `rule` with every letter <= window."""
        if rule == BRAID:
            return [(a, a + 1, a + 3) for a in range(1, window - 2)]
        return [(a, b) for a in range(1, window + 1) for b in range(a + self.swap_gap, window + 1)]


E_F = RewriteSystem(Monoid.F, "E_F", swap_gap=2, obstructions=O_F)
E_H = RewriteSystem(Monoid.H, "E_H", swap_gap=3, braid_shift=(1, 0, 1), obstructions=O_H)


def mutated_h_system():
    """E_H with the braid rule target replaced by g_{a+1} g_a g_{a+2}."""
    return RewriteSystem(Monoid.H, "E_H_mutated", swap_gap=3, braid_shift=(1, 0, 2), obstructions=O_H)


def system_for(monoid):
    """E_F for F, E_H for H."""
    return E_F if Monoid(monoid) == Monoid.F else E_H


def _step_at(sys, w, pos):
    for rule in sys.rules:
        result = sys.apply(rule, w, pos)
        if result is not None:
            if index_sum(result) >= index_sum(w):
                raise AssertionError(f"{sys.name} step at {pos} on {w} does not decrease the index sum")
            return result
    return None


def rewrite_once(sys, w):
    """All results of one rule application at one position."""
    w = tuple(w)
    results = set()
    for pos in range(len(w)):
        for rule in sys.rules:
            result = sys.apply(rule, w, pos)
            if result is not None:
                results.add(result)
    return results


def reduce_with_trace(sys, w, strategy="leftmost"):
    """
    Normalize w, recording each step.

    Args:
        sys (RewriteSystem): the rewrite system
        w (Word): input word
        strategy (str): "leftmost" or "rightmost" redex first

    Returns:
        tuple: (reduced word, list of (pos, before, after))
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    current = tuple(w)
    trace = []
    start = 0
    while True:
        if strategy == "leftmost":
            positions = range(start, len(current))
        else:
            positions = range(len(current) - 1, -1, -1)
        for pos in positions:
            result = _step_at(sys, current, pos)
            if result is not None:
                trace.append((pos, current, result))
                logger.debug(f"{sys.name} pos {pos}: {current} -> {result}")
                current = result
                # no redex starts before pos - 2 after a leftmost step
                start = max(0, pos - 2)
                break
        else:
            return current, trace


def reduce(sys, w, strategy="leftmost"):
    """
    Normal form of a word.

    Args:
        sys (RewriteSystem): E_F or E_H
        w (Word): input word
        strategy (str): "leftmost" or "rightmost" redex first

    Returns:
        Word: the irreducible word reached from w
    """
    return reduce_with_trace(sys, w, strategy)[0]


def is_reduced(sys, w):
    """True when w contains no factor from the obstruction set of sys."""
    return not contains_factor(tuple(w), sys.obstructions)


@dataclass(frozen=True)
class CriticalPair:
    source: tuple
    left_result: tuple
    right_result: tuple


def critical_pairs(sys, index_window):
    """
    Overlaps of two rule left sides, all letters <= index_window.

    The first redex starts at 0, the second at an offset inside it, either
    extending past its end or contained in it. Disjoint redexes are not listed.
    """
    if index_window < 8:
        raise ValueError("index window must be >= 8")
    instances = {rule: sys.lhs_instances(rule, index_window) for rule in sys.rules}
    by_prefix = {}
    for rule, lhss in instances.items():
        for lhs in lhss:
            for cut in (1, 2):
                by_prefix.setdefault((rule, lhs[:cut]), []).append(lhs)
    pairs = set()
    for rule, lhss in instances.items():
        for x in lhss:
            for other in sys.rules:
                for offset in range(len(x)):
                    if offset == 0 and other == rule:
                        continue
                    overlap = x[offset:]
                    if sys.lhs_length(other) <= len(overlap):
                        sources = [x] if sys.apply(other, x, offset) is not None else []
                    else:
                        sources = [x + y[len(overlap):] for y in by_prefix.get((other, overlap), [])]
                    for source in sources:
                        left = sys.apply(rule, source, 0)
                        right = sys.apply(other, source, offset)
                        if left != right:
                            pairs.add(CriticalPair(source, left, right))
    logger.info(f"{sys.name}: {len(pairs)} critical pairs up to index {index_window}")
    return pairs


@dataclass
class ConfluenceReport:
    system: str
    window: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return self.checked > 0 and not self.violations


def check_local_confluence(sys, index_window):
    """Reduce both sides of every critical pair and collect the disagreements."""
    report = ConfluenceReport(sys.name, index_window)
    for pair in sorted(critical_pairs(sys, index_window), key=lambda cp: cp.source):
        report.checked += 1
        left = reduce(sys, pair.left_result)
        right = reduce(sys, pair.right_result)
        if left != right:
            report.violations.append((pair, left, right))
    if report.violations:
        logger.warning(f"{sys.name}: {len(report.violations)} critical pairs are not joinable")
    return report


def append_reduce(w, i, sys=E_H):
    """
    Split a reduced word w as (w1, w2) so that red(w g_i) = w1 g_{i-|w2|} w2.

    Follows the induction on the last letter of w instead of calling reduce.
    """
    w = tuple(w)
    if not is_reduced(sys, w):
        raise NotReducedError(f"{w} is not {sys.name}-reduced")
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return _append(w, i)


def _append(w, i):
    if not w:
        return (), ()
    head, k = w[:-1], w[-1]
    if i <= k + 1:
        return w, ()
    if i >= k + 3:
        w1, w2 = _append(head, i - 1)
        return w1, w2 + (k,)
    if not head or head[-1] != i - 3:
        return w, ()
    w1, w2 = _append(head[:-1], i - 2)
    return w1, w2 + (i - 3, i - 2)


def f_steps_between(u, v, max_steps=2):
    """Least number of E_F steps from u to v, or None beyond max_steps."""
    frontier = {tuple(u)}
    for steps in range(max_steps + 1):
        if tuple(v) in frontier:
            return steps
        frontier = {nxt for word in frontier for nxt in rewrite_once(E_F, word)}
    return None


def reduced_words(sys, max_length, max_index):
    """Every reduced word with length <= max_length and letters <= max_index."""
    stack = [()]
    while stack:
        word = stack.pop()
        yield word
        if len(word) == max_length:
            continue
        for k in range(max_index, 0, -1):
            candidate = word + (k,)
            # only the new tail factors can be obstructions
            if not sys.obstructions.matches(candidate[-2:]) and not sys.obstructions.matches(candidate[-3:]):
                stack.append(candidate)


def gluing_exception(u, v, w):
    """
    Name the exceptional shape of (u, v, w) in which uv and vw are reduced
    while uvw is not, or None.
    """
    if not v and u and w:
        i = u[-1]
        if w[0] >= i + 3:
            return "u=..g_i, w=g_j.., j>=i+3"
        if w[:2] == (i + 1, i + 3):
            return "u=..g_i, w=g_{i+1}g_{i+3}.."
        if len(u) >= 2 and u[-2:] == (u[-2], u[-2] + 1) and w[0] == u[-2] + 3:
            return "u=..g_ig_{i+1}, w=g_{i+3}.."
    if len(v) == 1 and u and w:
        i = u[-1]
        if v[0] == i + 1 and w[0] == i + 3:
            return "u=..g_i, v=g_{i+1}, w=g_{i+3}.."
    return None


def gluing_failures(max_u, max_v, max_w, max_index, sys=E_H):
    """
    Exhaustive search for (u, v, w) with uv, vw reduced and uvw not reduced.

    Returns:
        tuple: (failures found, triples whose classification disagrees)
    """
    pool = {n: [x for x in reduced_words(sys, n, max_index)] for n in {max_u, max_v, max_w}}
    failures, mismatches = 0, []
    for u, v, w in product(pool[max_u], pool[max_v], pool[max_w]):
        if not (is_reduced(sys, u + v) and is_reduced(sys, v + w)):
            continue
        fails = not is_reduced(sys, u + v + w)
        failures += fails
        if fails != (gluing_exception(u, v, w) is not None):
            mismatches.append((u, v, w))
    logger.info(f"gluing search: {failures} failures, {len(mismatches)} unexplained")
    return failures, mismatches
