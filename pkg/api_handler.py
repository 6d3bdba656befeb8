"""
Command adapters for the CLI.

Each function parses nothing and computes nothing itself: it calls the
library and packs the outcome into the JSON envelope
{"command": ..., "result": ..., "status": ...}.
"""
import logging
from functools import wraps

import garside
import morphisms
import presentation
import reversing
import rewrite
from presentation import BudgetExceeded, mirrored, standard
from utils import format_matrix, pretty_word
from words import Monoid, format_word

logger = logging.getLogger(__name__)

OK = "ok"
TRUE = "true"
FALSE = "false"
INCONCLUSIVE = "inconclusive"


def envelope(command, result, status=OK):
    """
    Build the JSON envelope of a command.

    Args:
        command (str): command name
        result (dict): command specific payload
        status (str): ok, true, false or inconclusive

    Returns:
        dict: {"command": ..., "result": ..., "status": ...}
    """
    return {"command": command, "result": result, "status": status}


def _boolean(command, value, extra=None):
    result = {"value": value}
    if extra:
        result.update(extra)
    return envelope(command, result, TRUE if value else FALSE)


def handles_budget(command):
    """Turn budget exhaustion into an inconclusive envelope."""

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except BudgetExceeded as e:
                logger.warning(f"{command} inconclusive: {str(e)}")
                return envelope(command, {"reason": str(e)}, INCONCLUSIVE)

        return wrapper

    return decorator


def reduce_word(monoid, word, trace=False):
    """
    Normal form of a word.

    Args:
        monoid (Monoid): F or H
        word (Word): input word
        trace (bool): include the rewrite steps

    Returns:
        tuple: (envelope with the normal form and step count, raw steps)
    """
    nf, steps = rewrite.reduce_with_trace(rewrite.system_for(monoid), word)
    result = {"word": format_word(nf), "pretty": pretty_word(nf, monoid), "steps": len(steps)}
    if trace:
        result["trace"] = [[pos, format_word(before), format_word(after)] for pos, before, after in steps]
    return envelope("reduce", result), steps


@handles_budget("equal")
def equal_words(monoid, u, v, budget, method="reversing"):
    """
    Decide u == v.

    Args:
        monoid (Monoid): F or H
        u (Word): first word
        v (Word): second word
        budget (int): reversing or saturation budget
        method (str): "reversing", "normal_form" or "oracle"

    Returns:
        dict: boolean envelope with the method used
    """
    p = standard(monoid)
    if method == "reversing":
        value = reversing.equal_by_reversing(p, u, v, budget)
    elif method == "normal_form":
        sys = rewrite.system_for(monoid)
        value = rewrite.reduce(sys, u) == rewrite.reduce(sys, v)
    elif method == "oracle":
        value = presentation.oracle_equal(p, u, v, budget)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _boolean("equal", value, {"method": method})


@handles_budget("divides")
def divides_words(monoid, a, b, budget):
    """Left divisibility of b by a, with the quotient when it exists."""
    quotient = reversing.left_quotient(standard(monoid), a, b, budget)
    extra = {"quotient": None if quotient is None else format_word(quotient)}
    return _boolean("divides", quotient is not None, extra)


@handles_budget("lcm")
def lcm_words(monoid, a, b, budget, left=False):
    """Right lcm, or left lcm with left=True; status false when none exists."""
    p = standard(monoid)
    lcm = reversing.left_lcm(p, a, b, budget) if left else reversing.right_lcm(p, a, b, budget)
    result = {"side": "left" if left else "right", "lcm": None if lcm is None else format_word(lcm)}
    return envelope("lcm", result, OK if lcm is not None else FALSE)


def reverse_words(monoid, u, v, budget, left=False):
    """
    Run a reversing grid; left reversing uses the mirrored presentation on
    reversed words, and its outputs are reported un-reversed.
    """
    p = standard(monoid)
    if left:
        grid = reversing.reverse_right(mirrored(p), u[::-1], v[::-1], budget)
        u1, v1 = grid.right_output[::-1], grid.bottom_output[::-1]
    else:
        grid = reversing.reverse_right(p, u, v, budget)
        u1, v1 = grid.right_output, grid.bottom_output
    result = {
        "grid_status": grid.status,
        "u1": format_word(u1) if grid.complete else None,
        "v1": format_word(v1) if grid.complete else None,
        "cells": len(grid.cells),
    }
    status = INCONCLUSIVE if grid.status == reversing.BUDGET_EXCEEDED else OK
    return envelope("reverse", result, status), grid


@handles_budget("class")
def class_members(monoid, word, budget):
    """Sorted congruence class of a word; inconclusive when truncated."""
    cls = presentation.class_saturate(standard(monoid), word, budget)
    result = {
        "size": len(cls),
        "truncated": cls.truncated,
        "members": [format_word(member) for member in cls.sorted_members()],
    }
    return envelope("class", result, INCONCLUSIVE if cls.truncated else OK)


@handles_budget("simples")
def list_simples(monoid, n, method, budget=None):
    """
    Left divisors of Delta_n.

    Args:
        monoid (Monoid): F or H
        n (int): rank
        method (str): one of garside.METHODS
        budget (int, optional): search budget of the slower methods

    Returns:
        tuple: (envelope, list of SimpleRecord)
    """
    records = garside.enumerate_divisors(monoid, n, method, budget)
    result = {
        "monoid": Monoid(monoid).value,
        "n": n,
        "method": method,
        "count": len(records),
        "simples": [
            {"nf": format_word(r.nf), "length": r.length, "index": r.index, "type": r.type_tag} for r in records
        ],
    }
    return envelope("simples", result), records


def triangle_rows(n_max):
    """Rows of the counting triangle, with the CountTriangle for text output."""
    triangle = garside.count_triangle(n_max)
    return envelope("triangle", {"rows": {str(n): triangle.rows[n] for n in sorted(triangle.rows)}}), triangle


def greedy_factors(word, monoid=Monoid.F):
    """
    Greedy factors of an E_F-reduced word.

    Args:
        word (Word): a reduced word of F+
        monoid (Monoid): must be F; the decomposition is not defined in H+

    Returns:
        dict: envelope with the factors
    """
    if Monoid(monoid) is not Monoid.F:
        raise ValueError("greedy decomposition is only defined for --monoid F")
    return envelope("greedy", {"factors": [format_word(f) for f in garside.greedy_decompose_F(word)]})


def perm_word(permutation):
    """Expression of Delta attached to a permutation."""
    word = garside.perm_to_word(permutation)
    return envelope("perm-word", {"permutation": list(permutation.images), "word": format_word(word)})


def rho_images(word, points):
    """Images of the given points under rho(word)."""
    shift_map = morphisms.rho_of_word(word)
    images = {str(k): shift_map(k) for k in points}
    result = {"window": list(shift_map.window), "tail_offset": shift_map.tail_offset, "images": images}
    return envelope("rho", result)


def rho_tilde_matrix(word, dimension, t_value=None):
    """
    Rows of rho-tilde(word) as text.

    Args:
        word (Word): input word
        dimension (int): size of the truncated matrix
        t_value (int, optional): evaluate at this t, symbolic when None

    Returns:
        dict: envelope with one text row per matrix row
    """
    linear_map = morphisms.rho_tilde_of_word(word, dimension, t_value)
    result = {"dimension": dimension, "t": "sym" if t_value is None else t_value, "rows": format_matrix(linear_map)}
    return envelope("rho-tilde", result)
