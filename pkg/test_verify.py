"""
Test the acceptance harness, including the mutated braid rule as a negative control
"""
import pytest

from main import EXIT_FALSE, run
from verify import SCOPES, Context, experiments, mutated_context, run_criteria


def failing(results):
    return [r.name for r in results if not r.passed]


@pytest.mark.parametrize("scope", ["words", "presentation", "rewrite"])
def test_fast_scopes_pass(scope):
    results = run_criteria(scope)
    assert results
    assert all(r.scope == scope for r in results)
    assert failing(results) == []


def test_result_lines():
    lines = [r.line for r in run_criteria("rewrite")]
    assert "E_H local confluence window 30 : PASS" in lines
    assert "leftmost and rightmost reduction agree on seeded words : PASS" in lines


def test_mutated_braid_fails_rewrite_scope():
    names = failing(run_criteria("rewrite", mutated_context()))
    assert "reduce H g1 g2 g4 = g2 g1 g2" in names
    assert "E_H local confluence window 30" in names


def test_mutated_braid_cli_exits_nonzero():
    assert run(["verify", "rewrite", "--mutate-braid"]) == EXIT_FALSE


def test_unknown_scope():
    with pytest.raises(ValueError):
        run_criteria("everything")
    assert "garside" in SCOPES


@pytest.mark.slow
def test_garside_scope():
    results = run_criteria("garside", Context(samples=100))
    assert "divisors(H,4) = 18 : PASS" in [r.line for r in results]
    assert failing(results) == []


@pytest.mark.slow
@pytest.mark.parametrize("scope", ["reversing", "morphisms"])
def test_slow_scopes_pass(scope):
    ctx = Context(samples=100, divisibility_samples=60, cancellation_samples=100)
    assert failing(run_criteria(scope, ctx)) == []


@pytest.mark.slow
def test_sampled_reversing_and_projection_criteria():
    ctx = Context(samples=100, divisibility_samples=60, cancellation_samples=100)
    lines = [r.line for scope in ("reversing", "morphisms") for r in run_criteria(scope, ctx)]
    assert "complete grids satisfy u v1 = v u1 on seeded pairs : PASS" in lines
    assert "one E_H step projects to one or two E_F steps : PASS" in lines


@pytest.mark.slow
def test_experiments_report():
    report = experiments()["rho-tilde relations"]
    assert report["checked"] > 0
