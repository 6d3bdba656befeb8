"""
Acceptance harness.

Every criterion is a named check grouped by scope. run_criteria executes the
checks of a scope and returns one CriterionResult per check; the CLI prints
them as "name : PASS" / "name : FAIL" lines.
"""
import logging
from dataclasses import dataclass

import numpy as np

import config
import garside
import morphisms
import reversing
import rewrite
from presentation import (
    P_F,
    P_H,
    BudgetExceeded,
    is_right_complemented,
    mirrored,
    oracle_divides_left,
    oracle_equal,
)
from words import Monoid, ceiling, parse_word, shift

logger = logging.getLogger(__name__)

SCOPES = ("words", "presentation", "rewrite", "reversing", "garside", "morphisms")


@dataclass
class CriterionResult:
    scope: str
    name: str
    passed: bool
    detail: str = ""

    @property
    def line(self):
        return f"{self.name} : {'PASS' if self.passed else 'FAIL'}"


@dataclass
class Context:
    """Settings shared by all checks of one run."""

    sys_h: rewrite.RewriteSystem = rewrite.E_H
    budget: int = config.REVERSING_BUDGET
    samples: int = 1000
    divisibility_samples: int = 300
    cancellation_samples: int = 500
    seed: int = config.SEED

    def system(self, monoid):
        return rewrite.E_F if Monoid(monoid) == Monoid.F else self.sys_h


_CRITERIA = []


def criterion(scope, name):
    """Register the decorated check under a scope and a display name."""
    def decorator(func):
        _CRITERIA.append((scope, name, func))
        return func

    return decorator


# words


@criterion("words", "parse/format examples")
def _words_examples(ctx):
    return (
        parse_word("g1 g2 g4") == (1, 2, 4)
        and parse_word("e") == ()
        and ceiling(()) == 0
        and ceiling((1, 2, 4, 5)) == 5
    )


@criterion("words", "ceiling invariant under sampled P_F and P_H relation steps")
def _ceiling_invariance(ctx):
    for p in (P_F, P_H):
        for u, v in morphisms.random_relation_walks(ctx.samples // 2, ctx.seed, p=p):
            if ceiling(u) != ceiling(v):
                logger.info(f"ceiling differs on {u} / {v} in {p.name}")
                return False
    return True


@criterion("words", "shift preserves equivalence on sampled relation steps")
def _shift_invariance(ctx):
    for p in (P_F, P_H):
        sys = rewrite.system_for(p.monoid)
        for u, v in morphisms.random_relation_walks(ctx.samples // 4, ctx.seed + 3, p=p):
            for d in (1, 2, 5):
                if rewrite.reduce(sys, shift(u, d)) != rewrite.reduce(sys, shift(v, d)):
                    logger.info(f"shift by {d} separates {u} and {v} in {p.name}")
                    return False
    return True


# presentation


@criterion("presentation", "P_F and P_H right-complemented window 20")
def _right_complemented(ctx):
    return is_right_complemented(P_F, 20) and is_right_complemented(P_H, 20)


@criterion("presentation", "H non-injectivity witness g2 g1 / g1 g3")
def _projection_witness(ctx):
    distinct_in_h = not oracle_equal(P_H, (2, 1), (1, 3), ctx.budget)
    return distinct_in_h and oracle_equal(P_F, (2, 1), (1, 3), ctx.budget)


# rewrite


@criterion("rewrite", "reduce H g1 g2 g4 = g2 g1 g2")
def _reduce_example(ctx):
    return rewrite.reduce(ctx.sys_h, (1, 2, 4)) == (2, 1, 2)


@criterion("rewrite", "E_F local confluence window 30")
def _confluence_f(ctx):
    return rewrite.check_local_confluence(rewrite.E_F, 30).passed


@criterion("rewrite", "E_H local confluence window 30")
def _confluence_h(ctx):
    return rewrite.check_local_confluence(ctx.sys_h, 30).passed


@criterion("rewrite", "append shape on reduced words of length <= 6")
def _append_shape(ctx):
    for w in rewrite.reduced_words(ctx.sys_h, 6, 5):
        for i in range(1, ceiling(w) + 3):
            w1, w2 = rewrite.append_reduce(w, i, ctx.sys_h)
            if w1 + w2 != w or rewrite.reduce(ctx.sys_h, w + (i,)) != w1 + (i - len(w2),) + w2:
                logger.info(f"append shape fails for {w} * g{i}")
                return False
    return True


@criterion("rewrite", "gluing failures are exactly the four exceptional shapes")
def _gluing(ctx):
    _, mismatches = rewrite.gluing_failures(2, 1, 2, 6, ctx.sys_h)
    return not mismatches


@criterion("rewrite", "leftmost and rightmost reduction agree on seeded words")
def _strategies(ctx):
    for w in morphisms.random_words(ctx.samples // 2, ctx.seed + 4, max_length=10, max_index=8):
        for sys in (rewrite.E_F, ctx.sys_h):
            if rewrite.reduce(sys, w, "leftmost") != rewrite.reduce(sys, w, "rightmost"):
                logger.info(f"{sys.name}: strategies disagree on {w}")
                return False
    return True


# reversing


@criterion("reversing", "right diamond P_F window 20")
def _diamond_f(ctx):
    return reversing.check_diamond(P_F, 20, config.DIAMOND_BUDGET, ctx.budget).passed


@criterion("reversing", "right diamond P_H window 20")
def _diamond_h(ctx):
    return reversing.check_diamond(P_H, 20, config.DIAMOND_BUDGET, ctx.budget).passed


@criterion("reversing", "left diamond P_H fails at g6 against g1 g2 g4 = g2 g1 g2")
def _diamond_mirrored(ctx):
    report = reversing.check_diamond(mirrored(P_H), 6, config.DIAMOND_BUDGET, ctx.budget)
    return report.violates(6, (4, 2, 1), (2, 1, 2))


@criterion("reversing", "pinned H equivalences by reversing")
def _pinned_chains(ctx):
    pairs = [
        ((2, 4, 5, 7), (4, 2, 4, 5)),
        ((1, 2, 4, 5), (2, 3, 1, 2)),
        ((1, 2, 5, 7), (3, 5, 1, 2)),
    ]
    return all(reversing.equal_by_reversing(P_H, u, v, ctx.budget) for u, v in pairs)


@criterion("reversing", "left lcm of g1 and g4 in F is g3 g1")
def _left_lcm_example(ctx):
    return reversing.left_lcm_F((1,), (4,), ctx.budget) == (3, 1) and reversing.left_lcm_F((1,), (2,), ctx.budget) is None


def _agreement(ctx, p):
    pairs = morphisms.random_relation_walks(ctx.samples // 2, ctx.seed, p=p)
    rng = np.random.default_rng(ctx.seed)
    for _ in range(ctx.samples - len(pairs)):
        size = int(rng.integers(1, 9))
        pairs.append(tuple(tuple(int(k) for k in rng.integers(1, 6, size=size)) for _ in range(2)))
    sys = ctx.system(p.monoid)
    for u, v in pairs:
        by_nf = rewrite.reduce(sys, u) == rewrite.reduce(sys, v)
        by_reversing = reversing.equal_by_reversing(p, u, v, ctx.budget)
        by_oracle = oracle_equal(p, u, v, config.SATURATION_BUDGET)
        if not by_nf == by_reversing == by_oracle:
            logger.info(f"{p.name}: equality methods disagree on {u} and {v}")
            return False
    return True


@criterion("reversing", "F equality: normal form, reversing and oracle agree")
def _agreement_f(ctx):
    return _agreement(ctx, P_F)


@criterion("reversing", "H equality: normal form, reversing and oracle agree")
def _agreement_h(ctx):
    return _agreement(ctx, P_H)


@criterion("reversing", "complete grids satisfy u v1 = v u1 on seeded pairs")
def _grid_consistency(ctx):
    words = morphisms.random_words(ctx.samples // 5, ctx.seed + 5, max_length=3, max_index=5)
    complete = 0
    for p in (P_F, P_H):
        for u, v in zip(words[::2], words[1::2]):
            grid = reversing.reverse_right(p, u, v, config.DIAMOND_BUDGET)
            if not grid.complete:
                continue
            complete += 1
            if not reversing.grid_is_consistent(p, grid, config.SATURATION_BUDGET):
                logger.info(f"{p.name}: grid on {u} / {v} is not consistent")
                return False
    return complete > 0


@criterion("reversing", "divisibility by reversing agrees with the oracle")
def _divisibility_agreement(ctx):
    rng = np.random.default_rng(ctx.seed + 1)
    for count in range(ctx.divisibility_samples):
        p = P_F if count % 2 else P_H
        a = tuple(int(k) for k in rng.integers(1, 5, size=int(rng.integers(1, 4))))
        b = tuple(int(k) for k in rng.integers(1, 5, size=int(rng.integers(1, 7))))
        if count % 3 == 0:
            b = a + b
        if reversing.divides_left(p, a, b, ctx.budget) != oracle_divides_left(p, a, b, config.SATURATION_BUDGET):
            logger.info(f"{p.name}: divisibility methods disagree on {a} and {b}")
            return False
    return True


@criterion("reversing", "left and right cancellation on seeded triples")
def _cancellation(ctx):
    rng = np.random.default_rng(ctx.seed + 2)
    for count in range(ctx.cancellation_samples):
        monoid = Monoid.F if count % 2 else Monoid.H
        p, sys = (P_F, rewrite.E_F) if monoid == Monoid.F else (P_H, ctx.sys_h)
        a, x, y = (tuple(int(k) for k in rng.integers(1, 4, size=int(rng.integers(0, 4)))) for _ in range(3))
        same = rewrite.reduce(sys, x) == rewrite.reduce(sys, y)
        if rewrite.reduce(sys, a + x) == rewrite.reduce(sys, a + y) and not same:
            return False
        if rewrite.reduce(sys, x + a) == rewrite.reduce(sys, y + a) and not same:
            return False
        quotient = reversing.left_quotient(p, a, a + x, ctx.budget)
        if quotient is None or rewrite.reduce(sys, quotient) != rewrite.reduce(sys, x):
            return False
    return True


# garside


def _count(monoid, n, method):
    return len(garside.enumerate_divisors(monoid, n, method))


@criterion("garside", "divisors(F,n) = 2^(n-1) for n <= 12")
def _f_counts(ctx):
    return all(_count(Monoid.F, n, "forbidden_factors") == 2 ** (n - 1) for n in range(2, 13))


@criterion("garside", "F enumeration methods agree")
def _f_methods(ctx):
    def nfs(n, method):
        return [r.nf for r in garside.enumerate_divisors(Monoid.F, n, method)]

    return all(nfs(n, "forbidden_factors") == nfs(n, "bfs_reversing") for n in range(1, 9)) and all(
        nfs(n, "forbidden_factors") == nfs(n, "oracle") for n in range(1, 7)
    )


@criterion("garside", "divisors(H,4) = 18")
def _h_four(ctx):
    return _count(Monoid.H, 4, "forbidden_factors") == 18


@criterion("garside", "divisors(H,n) = 2*3^(n-2) for n <= 8")
def _h_counts(ctx):
    return all(_count(Monoid.H, n, "forbidden_factors") == 2 * 3 ** (n - 2) for n in range(2, 9))


@criterion("garside", "H enumeration methods agree")
def _h_methods(ctx):
    def nfs(n, method):
        return [r.nf for r in garside.enumerate_divisors(Monoid.H, n, method)]

    return all(nfs(n, "forbidden_factors") == nfs(n, "bfs_reversing") for n in range(1, 9)) and all(
        nfs(n, "forbidden_factors") == nfs(n, "oracle") for n in range(1, 5)
    )


@criterion("garside", "Sigma_3 in H")
def _sigma_three(ctx):
    found = {r.nf for r in garside.enumerate_divisors(Monoid.H, 3)}
    return found == {(), (1,), (2,), (1, 2), (2, 1), (2, 1, 2)}


@criterion("garside", "Delta normal forms for ranks <= 10")
def _delta_forms(ctx):
    ranks = [(Monoid.F, n) for n in range(1, 11)]
    ranks += [(Monoid.H, n) for n in range(1, 11)] + [(Monoid.H, n + 0.5) for n in range(1, 10)]
    return all(
        rewrite.reduce(ctx.system(m), garside.delta_word(m, r)) == garside.delta_nf(m, r) for m, r in ranks
    )


@criterion("garside", "Delta chain and Delta_n = g_(n-1) Delta_(n-0.5) for n <= 8")
def _delta_chain(ctx):
    for n in range(2, 9):
        d, half, up = (garside.delta_word(Monoid.H, r) for r in (n, n + 0.5, n + 1))
        if not (reversing.divides_left(P_H, d, half, ctx.budget) and reversing.divides_left(P_H, half, up, ctx.budget)):
            return False
        if not reversing.equal_by_reversing(P_H, d, (n - 1,) + garside.delta_word(Monoid.H, n - 0.5), ctx.budget):
            return False
    return True


@criterion("garside", "lcm of atoms is Delta_n and g_i does not divide Delta_n for i >= n, n <= 7")
def _atom_lcms(ctx):
    for monoid, p in ((Monoid.F, P_F), (Monoid.H, P_H)):
        sys = ctx.system(monoid)
        for n in range(2, 8):
            lcm = ()
            for i in range(1, n):
                lcm = reversing.right_lcm(p, lcm, (i,), ctx.budget)
            if rewrite.reduce(sys, lcm) != garside.delta_nf(monoid, n):
                return False
            delta = garside.delta_word(monoid, n)
            if any(reversing.divides_left(p, (i,), delta, ctx.budget) for i in range(n, n + 3)):
                return False
    return True


@criterion("garside", "generators cross Delta by reversing, n <= 7")
def _delta_crossing(ctx):
    return garside.delta_crossing_holds(7, ctx.budget)


@criterion("garside", "counting triangle")
def _triangle(ctx):
    triangle = garside.count_triangle(10)
    if triangle.rows[2] != [1, 1] or triangle.entry(5, 2) != 9:
        return False
    if triangle.central_column()[:5] != [1, 2, 5, 13, 35]:
        return False
    for n in range(2, 11):
        if not triangle.is_palindromic(n) or triangle.row_sum(n) != 2 * 3 ** (n - 2):
            return False
        if triangle.rows[n] != garside.generating_coefficients(n):
            return False
    for n in range(2, 9):
        if garside.length_counts(garside.enumerate_divisors(Monoid.H, n), n) != triangle.rows[n]:
            return False
    return all(garside.count_index_exactly(n) == 4 * 3 ** (n - 3) for n in range(3, 11))


@criterion("garside", "index from normal form agrees with reversing, n <= 6")
def _index_cross_check(ctx):
    return all(
        garside.index_of(m, r.nf) == garside.least_delta_rank(m, r.nf, ctx.budget)
        for m in (Monoid.F, Monoid.H)
        for r in garside.enumerate_divisors(m, 6)
    )


@criterion("garside", "type partition and prefix classification, n <= 6")
def _types(ctx):
    for n in range(2, 7):
        for record in garside.enumerate_divisors(Monoid.H, n):
            if garside.type_memberships(record.nf, n, ctx.budget) != {record.type_tag}:
                logger.info(f"type of {record.nf} at rank {n} is not unique or disagrees")
                return False
    return True


@criterion("garside", "type maps are bijections, n <= 6")
def _bijections(ctx):
    return all(garside.bijection_maps(n, ell, ctx.budget).passed for n in range(3, 7) for ell in range(2 * n - 2))


@criterion("garside", "type prefix stripping, n <= 6")
def _strip_prefix(ctx):
    for n in range(3, 7):
        below, half = (garside.delta_word(Monoid.H, r) for r in (n - 1, n - 1.5))
        for record in garside.enumerate_divisors(Monoid.H, n):
            tag, rest = garside.strip_type_prefix(record.nf, n)
            if not garside.is_simple_nf(Monoid.H, rest) or garside.index_of(Monoid.H, rest) >= n:
                return False
            condition = {
                garside.TYPE_0: True,
                garside.TYPE_I: reversing.divides_left(P_H, rest, below, ctx.budget),
                garside.TYPE_II1: reversing.divides_left(P_H, rest, half, ctx.budget),
                garside.TYPE_II2: reversing.divides_left(P_H, (n - 2,) + rest, below, ctx.budget),
            }[tag]
            if not condition:
                return False
    return True


@criterion("garside", "ceiling bound on divisors of Delta_(n+0.5), n <= 6")
def _ceiling_bound(ctx):
    for n in range(2, 7):
        for nf in garside.divisors_of(Monoid.H, garside.delta_word(Monoid.H, n + 0.5), ctx.budget):
            if nf and ceiling(nf) > n + len(nf) - 2:
                return False
    return True


@criterion("garside", "half-Delta divisibility and first letter law, n <= 6")
def _first_letter(ctx):
    for n in range(2, 7):
        half = garside.delta_word(Monoid.H, n - 0.5)
        for record in garside.enumerate_divisors(Monoid.H, n):
            starts = reversing.divides_left(P_H, (n - 1,), record.nf, ctx.budget)
            if reversing.divides_left(P_H, record.nf, half, ctx.budget) == starts:
                return False
            if starts and record.nf[:1] != (n - 1,):
                return False
    return True


@criterion("garside", "permutation action on w_f, n <= 5")
def _permutation_action(ctx):
    return all(garside.permutation_action_holds(n) for n in range(3, 6))


@criterion("garside", "greedy decomposition of g4 g3 g2 g3 g1 g1 g2")
def _greedy(ctx):
    return garside.greedy_decompose_F((4, 3, 2, 3, 1, 1, 2)) == [(4, 3, 2), (3, 1), (1,), (2,)]


@criterion("garside", "g2 g4 right-divides Delta_3 but is not simple")
def _non_garside(ctx):
    return garside.non_garside_witness()


@criterion("garside", "every expression of Delta_n splits at g_(n+|w1|-1), n <= 5")
def _expression_split(ctx):
    return all(garside.expression_split_holds(n) for n in range(2, 6))


@criterion("garside", "F simples closed under right divisors and lcms, n <= 6")
def _f_closure(ctx):
    return all(garside.f_right_divisors_are_simple(n) and garside.f_lcms_divide_delta(n, ctx.budget) for n in range(2, 7))


# morphisms


@criterion("morphisms", "projection to F respects the H relations")
def _projection(ctx):
    return morphisms.pi_is_well_defined(min(ctx.samples, 500), ctx.seed)


@criterion("morphisms", "one E_H step projects to one or two E_F steps")
def _projection_steps(ctx):
    return morphisms.projection_step_bound_holds(min(ctx.samples, 300), ctx.seed)


@criterion("morphisms", "projection identifies g2 g1 and g1 g3")
def _projection_collision(ctx):
    pi = [rewrite.reduce(rewrite.E_F, morphisms.project_pi(w)) for w in ((2, 1), (1, 3))]
    return pi[0] == pi[1] and rewrite.reduce(ctx.sys_h, (2, 1)) != rewrite.reduce(ctx.sys_h, (1, 3))


@criterion("morphisms", "rho relations window 20")
def _rho_relations(ctx):
    return morphisms.rho_check_relations(20).passed


@criterion("morphisms", "rho collision g1 g1 g2 / g1 g2 g3")
def _rho_collision(ctx):
    return morphisms.rho_of_word((1, 1, 2)) == morphisms.rho_of_word((1, 2, 3))


@criterion("morphisms", "rho-tilde at t=0 is the coordinate action of rho")
def _rho_tilde_zero(ctx):
    words = [(1,), (2, 1), (1, 2, 4), (3, 1, 2), (1, 1, 2), (2, 4, 5, 7)]
    for w in words:
        dimension = max(w) + 6
        at_zero = morphisms.rho_tilde_of_word(w, dimension, 0)
        coordinates = morphisms.coordinate_matrix(morphisms.rho_of_word(w), dimension)
        if not at_zero.rows_equal(coordinates):
            return False
    return True


@criterion("morphisms", "rho-tilde separates the rho collision at t=2 and symbolically")
def _rho_tilde_separates(ctx):
    a, b = (morphisms.rho_tilde_of_word(w, 10) for w in ((1, 1, 2), (1, 2, 3)))
    return not a.rows_equal(b) and not a.evaluate(2).rows_equal(b.evaluate(2))


def run_criteria(scope="all", ctx=None):
    """
    Run every criterion of a scope.

    Args:
        scope (str): "all" or one of SCOPES
        ctx (Context, optional): shared settings, e.g. a mutated E_H

    Returns:
        list[CriterionResult]: one result per criterion, in registration order
    """
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}, expected all or one of {', '.join(SCOPES)}")
    ctx = ctx or Context()
    results = []
    for criterion_scope, name, check in _CRITERIA:
        if scope not in ("all", criterion_scope):
            continue
        try:
            passed, detail = bool(check(ctx)), ""
        except (BudgetExceeded, ValueError, AssertionError) as e:
            logger.error(f"criterion {name!r} raised: {str(e)}")
            passed, detail = False, f"{type(e).__name__}: {str(e)}"
        results.append(CriterionResult(criterion_scope, name, passed, detail))
    return results


def experiments():
    """Checks whose outcome is reported only."""
    report = morphisms.rho_tilde_relation_report()
    return {"rho-tilde relations": {"checked": report.checked, "not_satisfied": len(report.failures)}}


def mutated_context(**kwargs):
    """Context whose H rewrite system uses the mutated braid rule."""
    return Context(sys_h=rewrite.mutated_h_system(), **kwargs)

