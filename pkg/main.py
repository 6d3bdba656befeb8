#!/usr/bin/env python3
"""
Command-line front end for the Garside toolkit on the monoids F+ and H+.

Words are written as space-separated generators, e.g. "g1 g2 g4", or "e"
for the empty word. Exit codes: 0 success or true, 1 false, 2 usage error,
3 inconclusive (budget exhausted).
"""
import argparse
import json
import logging
import sys

from pythonjsonlogger import jsonlogger

import api_handler
import config
import verify
from garside import METHODS, Permutation, simples_frame
from presentation import BudgetExceeded
from utils import format_trace, render_grid_ascii, render_grid_tikz
from words import Monoid, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_EXIT_CODES = {
    api_handler.OK: EXIT_OK,
    api_handler.TRUE: EXIT_OK,
    api_handler.FALSE: EXIT_FALSE,
    api_handler.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


def configure_logging(level, json_format=False):
    """Send log records to stderr, as plain text or one JSON object per line."""
    handler = logging.StreamHandler(sys.stderr)
    if json_format:
        handler.setFormatter(jsonlogger.JsonFormatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
    else:
        handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    logging.basicConfig(level=level.upper(), handlers=[handler], force=True)


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _t_value(text):
    if text == "sym":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--t takes an integer or 'sym', got {text!r}") from None


def build_parser():
    """Argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON envelope")
    common.add_argument("--budget", type=int, default=config.REVERSING_BUDGET, help="reversing / search budget")
    common.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level (default from GARSIDE_LOG_LEVEL)")
    common.add_argument("--log-json", action="store_true", help="log as JSON lines")

    monoid = argparse.ArgumentParser(add_help=False)
    monoid.add_argument("--monoid", type=Monoid.parse, default="H", help="F or H (default H)")

    parser = argparse.ArgumentParser(prog="garside", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common, monoid], help="normal form of a word")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="show every rewrite step")

    p = sub.add_parser("equal", parents=[common, monoid], help="decide u == v")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--method", choices=("reversing", "normal_form", "oracle"), default="reversing")

    p = sub.add_parser("divides", parents=[common, monoid], help="decide whether a left-divides b")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("lcm", parents=[common, monoid], help="right (or left) lcm")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--left", action="store_true")

    p = sub.add_parser("reverse", parents=[common, monoid], help="run a reversing grid")
    p.add_argument("u")
    p.add_argument("v")
    side = p.add_mutually_exclusive_group()
    side.add_argument("--left", action="store_true")
    side.add_argument("--right", action="store_true")
    p.add_argument("--render", choices=("ascii", "tikz"))

    p = sub.add_parser("class", parents=[common, monoid], help="all words equivalent to a word")
    p.add_argument("word")

    p = sub.add_parser("simples", parents=[common, monoid], help="left divisors of Delta_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="forbidden_factors")

    p = sub.add_parser("triangle", parents=[common], help="counting triangle of simples by length")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("greedy", parents=[common], help="greedy factors of an E_F-reduced word")
    p.add_argument("word")
    p.add_argument("--monoid", type=Monoid.parse, default="F", help="F only")

    p = sub.add_parser("perm-word", parents=[common], help="expression of Delta attached to a permutation")
    p.add_argument("permutation", help="images, e.g. 3,1,2")

    p = sub.add_parser("rho", parents=[common], help="the self-map rho(w) of the positive integers")
    p.add_argument("--word", required=True)
    p.add_argument("--eval", type=_int_list, default=None, help="points to evaluate, e.g. 1,2,3")

    p = sub.add_parser("rho-tilde", parents=[common], help="the polynomial matrix rho-tilde(w)")
    p.add_argument("--word", required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--t", type=_t_value, default=None, help="integer value of t, or 'sym'")

    p = sub.add_parser("verify", parents=[common], help="run the acceptance criteria")
    p.add_argument("scope", nargs="?", default="all", choices=("all",) + verify.SCOPES)
    p.add_argument("--mutate-braid", action="store_true", help="use the mutated E_H braid rule")
    p.add_argument("--samples", type=int, default=1000, help="random pairs per monoid")
    p.add_argument("--seed", type=int, default=config.SEED, help="seed for the sampled criteria")

    return parser


def _dispatch(args):
    """Run one command; returns (envelope, text lines)."""
    command = args.command
    if command == "reduce":
        env, steps = api_handler.reduce_word(args.monoid, parse_word(args.word), args.trace)
        lines = format_trace(steps) if args.trace else []
        return env, lines + [env["result"]["word"]]
    if command == "equal":
        env = api_handler.equal_words(args.monoid, parse_word(args.u), parse_word(args.v), args.budget, args.method)
        return env, [env["status"]]
    if command == "divides":
        env = api_handler.divides_words(args.monoid, parse_word(args.a), parse_word(args.b), args.budget)
        lines = [env["status"]]
        if env["result"].get("quotient") is not None:
            lines.append(f"quotient: {env['result']['quotient']}")
        return env, lines
    if command == "lcm":
        env = api_handler.lcm_words(args.monoid, parse_word(args.a), parse_word(args.b), args.budget, args.left)
        lcm = env["result"].get("lcm")
        if lcm is None:
            return env, ["none" if env["status"] == api_handler.FALSE else env["status"]]
        return env, [lcm]
    if command == "reverse":
        env, grid = api_handler.reverse_words(args.monoid, parse_word(args.u), parse_word(args.v), args.budget, args.left)
        result = env["result"]
        if args.render == "ascii":
            lines = render_grid_ascii(grid).splitlines()
        elif args.render == "tikz":
            lines = render_grid_tikz(grid).splitlines()
        else:
            lines = [f"status: {result['grid_status']}"]
        if result["u1"] is not None:
            lines += [f"u1: {result['u1']}", f"v1: {result['v1']}"]
        lines.append(f"cells: {result['cells']}")
        return env, lines
    if command == "class":
        env = api_handler.class_members(args.monoid, parse_word(args.word), args.budget)
        return env, env["result"].get("members", [env["status"]])
    if command == "simples":
        outcome = api_handler.list_simples(args.monoid, args.n, args.method, args.budget)
        if isinstance(outcome, dict):
            return outcome, [outcome["status"]]
        env, records = outcome
        frame = simples_frame(records)
        return env, frame.to_string(index=False).splitlines() + [f"count: {len(records)}"]
    if command == "triangle":
        env, triangle = api_handler.triangle_rows(args.nmax)
        if args.csv:
            return env, triangle.csv_lines()
        return env, [" ".join(str(x) for x in triangle.rows[n]) for n in sorted(triangle.rows)]
    if command == "greedy":
        env = api_handler.greedy_factors(parse_word(args.word), args.monoid)
        return env, [" | ".join(env["result"]["factors"])]
    if command == "perm-word":
        env = api_handler.perm_word(Permutation.parse(args.permutation))
        return env, [env["result"]["word"]]
    if command == "rho":
        word = parse_word(args.word)
        points = args.eval or list(range(1, max(word, default=0) + 4))
        env = api_handler.rho_images(word, points)
        return env, [f"{k} -> {v}" for k, v in env["result"]["images"].items()]
    if command == "rho-tilde":
        env = api_handler.rho_tilde_matrix(parse_word(args.word), args.dim, args.t)
        return env, env["result"]["rows"]
    if command == "verify":
        ctx_args = {"budget": args.budget, "samples": args.samples, "seed": args.seed}
        ctx = verify.mutated_context(**ctx_args) if args.mutate_braid else verify.Context(**ctx_args)
        results = verify.run_criteria(args.scope, ctx)
        passed = all(r.passed for r in results)
        payload = {
            "scope": args.scope,
            "mutated": args.mutate_braid,
            "criteria": [{"scope": r.scope, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        }
        if passed and args.scope in ("all", "morphisms"):
            payload["experiments"] = verify.experiments()
        env = api_handler.envelope("verify", payload, api_handler.OK if passed else api_handler.FALSE)
        return env, [r.line for r in results]
    raise ValueError(f"unknown command {command!r}")


def run(argv=None):
    """
    Parse argv, run the command and print its output.

    Returns:
        int: the exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        configure_logging(args.log_level, args.log_json)
        env, lines = _dispatch(args)
    except BudgetExceeded as e:
        logger.warning(f"{args.command}: {str(e)}")
        env, lines = api_handler.envelope(args.command, {"reason": str(e)}, api_handler.INCONCLUSIVE), [
            api_handler.INCONCLUSIVE
        ]
    except ValueError as e:
        logger.error(f"{args.command}: {str(e)}")
        return EXIT_USAGE
    if args.json:
        print(json.dumps(env, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return _EXIT_CODES.get(env["status"], EXIT_OK)


if __name__ == "__main__":
    sys.exit(run())
