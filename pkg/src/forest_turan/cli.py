"""Command-line interface: ``forest-turan <subcommand> ...``.

Exit codes: 0 success, 2 usage error (bad flags, forest or pattern syntax),
3 budget exceeded, 4 verification mismatch (with ``--expect-match``),
5 malformed graph input, 6 construction parameter violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .constructions import FAMILIES, ConstructionError, FamilyParams, build_extremal, build_family, family_star_count, theorem_value
from .forest import ForestSyntaxError, find_forest, parse_forest
from .graph import Graph, Graph6Error, count_copies, count_stars, from_graph6, from_json, to_graph6, to_json
from .patterns import PatternGraph, parse_pattern
from .search import (
    BudgetExceeded,
    EnumerationBudget,
    brute_force_ex,
    default_workers,
    explore_problem1,
    find_threshold,
    verify_classification,
)
from .shifting import shift, shift_closure, shift_delta

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4
EXIT_BAD_GRAPH = 5
EXIT_CONSTRAINT = 6


class UsageError(Exception):
    pass


class BadGraphInput(Exception):
    pass


def _dump(payload: dict) -> str:
    return json.dumps(payload)


def _forest(text: str):
    try:
        return parse_forest(text)
    except (ForestSyntaxError, ValueError) as exc:
        raise UsageError(f"--forest: {exc}") from None


def _pattern(text: str) -> PatternGraph:
    try:
        return parse_pattern(text)
    except Graph6Error as exc:
        raise BadGraphInput(f"--j: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"--j: {exc}") from None


def _read_graph(args: argparse.Namespace, stdin: TextIO) -> Graph:
    if args.g6 is not None:
        text = args.g6
    elif args.input is not None:
        if args.input == "-":
            text = stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise BadGraphInput(f"cannot read {args.input}: {exc}") from None
    else:
        raise UsageError("give a graph with --in PATH or --g6 STRING")
    text = text.strip()
    try:
        if text.startswith("{"):
            return from_json(text)
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise BadGraphInput(f"expected exactly one graph6 line, got {len(lines)}")
        return from_graph6(lines[0])
    except Graph6Error as exc:
        raise BadGraphInput(str(exc)) from None
    except ValueError as exc:
        raise BadGraphInput(f"bad edge-list JSON: {exc}") from None


def _budget(args: argparse.Namespace, n: int) -> EnumerationBudget:
    workers = args.threads if args.threads is not None else default_workers()
    return EnumerationBudget(
        mode=args.mode,
        max_n=n if args.unsafe else None,
        workers=workers,
        node_limit=args.node_limit,
        unsafe=args.unsafe,
    )


def _emit(text: str, dest: Optional[str], stdout: TextIO) -> None:
    if dest in (None, "-"):
        stdout.write(text + "\n")
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _bool(value: Optional[bool]) -> str:
    return "none" if value is None else str(value).lower()


# subcommands ------------------------------------------------------------------


def cmd_formula(args, stdout, stdin) -> int:
    forest = _forest(args.forest)
    value = theorem_value(forest, args.n, args.r)
    if args.json:
        stdout.write(_dump({"forest": forest.text, "n": args.n, "r": args.r, "formula": value}) + "\n")
    else:
        stdout.write(f"{value}\n")
    return EXIT_OK


def cmd_construct(args, stdout, stdin) -> int:
    g = build_extremal(_forest(args.forest), args.n)
    _emit(to_json(g) if args.json else to_graph6(g), args.out, stdout)
    return EXIT_OK


def cmd_family(args, stdout, stdin) -> int:
    forest = _forest(args.forest) if args.forest else None
    params = FamilyParams(args.name, n=args.n, t1=args.t1, t2=args.t2, h=args.h, t=args.t, forest=forest)
    g = build_family(params)
    _emit(to_json(g) if args.json else to_graph6(g), args.out, stdout)
    if args.r is not None:
        formula = family_star_count(params, args.r)
        direct = count_stars(g, args.r)
        stdout.write(f"formula={formula} direct={direct}\n")
        if args.expect_match and formula != direct:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_count_stars(args, stdout, stdin) -> int:
    g = _read_graph(args, stdin)
    stdout.write(f"{count_stars(g, args.r)}\n")
    return EXIT_OK


def cmd_count_copies(args, stdout, stdin) -> int:
    pattern = _pattern(args.j)
    g = _read_graph(args, stdin)
    stdout.write(f"{count_copies(pattern.graph, g)}\n")
    return EXIT_OK


def cmd_contains(args, stdout, stdin) -> int:
    forest = _forest(args.forest)
    g = _read_graph(args, stdin)
    witness = find_forest(g, forest)
    if args.json:
        stdout.write(_dump({"forest": forest.text, "contains": witness is not None, "witness": witness}) + "\n")
    else:
        stdout.write(f"{_bool(witness is not None)}\n")
    return EXIT_OK


def cmd_shift(args, stdout, stdin) -> int:
    g = _read_graph(args, stdin)
    if args.closure:
        if args.i is not None or args.j is not None:
            raise UsageError("--closure takes no --i/--j")
        stdout.write(to_graph6(shift_closure(g)) + "\n")
        return EXIT_OK
    if args.i is None or args.j is None:
        raise UsageError("shift needs --i and --j (or --closure)")
    try:
        shifted = shift(g, args.i, args.j)
        delta = shift_delta(g, args.i, args.j, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        stdout.write(
            _dump(
                {
                    "graph6": to_graph6(shifted),
                    "n_i": delta.n_i,
                    "n_j": delta.n_j,
                    "n_ij": delta.n_ij,
                    "adjacent": delta.adjacent,
                    "r": delta.r,
                    "delta": delta.delta_r,
                }
            )
            + "\n"
        )
    else:
        stdout.write(to_graph6(shifted) + "\n")
        stdout.write(
            f"n_i={delta.n_i} n_j={delta.n_j} n_ij={delta.n_ij} adjacent={_bool(delta.adjacent)} "
            f"r={delta.r} delta={delta.delta_r}\n"
        )
    return EXIT_OK


def _pattern_arg(args) -> PatternGraph:
    if args.j is not None and args.r is not None:
        raise UsageError("give either --r or --j, not both")
    if args.j is not None:
        return _pattern(args.j)
    if args.r is None:
        raise UsageError("give --r or --j")
    if args.r < 0:
        raise UsageError("--r must be >= 0")
    return PatternGraph.star(args.r)


def cmd_brute(args, stdout, stdin) -> int:
    forest = _forest(args.forest)
    pattern = _pattern_arg(args)
    report = brute_force_ex(args.n, pattern, forest, _budget(args, args.n))
    if args.json:
        stdout.write(report.to_json() + "\n")
    else:
        stdout.write(f"n={report.n} forest={forest.text} J={pattern.text}\n")
        stdout.write(f"max={report.max_count}\n")
        stdout.write(f"formula={'none' if report.formula_value is None else report.formula_value}\n")
        stdout.write(f"match={_bool(report.matches_formula)}\n")
        stdout.write(f"iso_to_construction={_bool(report.matches_construction)}\n")
        if report.outside_hypotheses:
            stdout.write("note=outside the closed form's range (r < 2)\n")
        for g6 in report.extremal_graphs:
            stdout.write(g6 + "\n")
    if args.expect_match:
        verdict = report.matches_formula if report.matches_formula is not None else report.matches_construction
        if not verdict:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_threshold(args, stdout, stdin) -> int:
    forest = _forest(args.forest)
    try:
        forest.require_path_orders()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.r < 1:
        raise UsageError("--r must be >= 1")
    report = find_threshold(forest, args.r, args.n_max, _budget(args, args.n_max))
    if args.json:
        stdout.write(_dump(report.to_dict()) + "\n")
    else:
        stdout.write(report.to_csv())
        stdout.write(f"# {report.status}\n")
    if args.expect_match and report.threshold is None:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify_lemma1(args, stdout, stdin) -> int:
    if args.a < 2 or args.b < 2:
        raise UsageError("--a and --b must be >= 2")
    report = verify_classification(args.a, args.b, args.n, _budget(args, args.n))
    if args.json:
        stdout.write(_dump(report.to_dict()) + "\n")
    else:
        d = report.to_dict()
        stdout.write(f"a={report.a} b={report.b} n={report.n} h={report.h}\n")
        stdout.write(f"free_graphs={report.free_graphs} min_degree_candidates={report.candidates}\n")
        stdout.write("case_hits=" + ",".join(f"{k}:{v}" for k, v in d["case_hits"].items()) + "\n")
        stdout.write(f"uncovered={len(report.uncovered)} (connected {len(report.uncovered_connected)})\n")
        stdout.write(f"relaxed_only={len(report.relaxed_only)}\n")
        if report.vacuous_order:
            stdout.write("note=n is below the forest order, every graph is forest-free\n")
        for g6 in report.uncovered:
            stdout.write(g6 + "\n")
    if args.expect_match and report.uncovered:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_explore(args, stdout, stdin) -> int:
    forest = _forest(args.forest)
    pattern = _pattern(args.j)
    n_min = args.n_min if args.n_min is not None else forest.order
    if n_min > args.n_max:
        raise UsageError("--n-min exceeds --n-max")
    report = explore_problem1(
        pattern, forest, range(n_min, args.n_max + 1), _budget(args, args.n_max), seed=args.seed, samples=args.samples
    )
    if args.json:
        stdout.write(_dump(report.to_dict()) + "\n")
    else:
        stdout.write(f"J={pattern.text} forest={forest.text}\n")
        stdout.write(
            f"premise: {report.probe_graphs} graphs, {report.probe_pairs} shifts, {len(report.violations)} violations\n"
        )
        for v in report.violations:
            stdout.write(f"violation {v.graph} i={v.i} j={v.j} before={v.before} after={v.after}\n")
        stdout.write("n,max,iso_to_construction,extremal\n")
        for row in report.rows:
            stdout.write(f"{row.n},{row.max_count},{_bool(row.matches_construction)},{' '.join(row.extremal_graphs)}\n")
        stdout.write(f"answer={report.answer}\n")
    return EXIT_OK


# parser -------------------------------------------------------------------------


def _graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--in", dest="input", metavar="PATH", help="graph6 or edge-list JSON file ('-' for stdin)")
    src.add_argument("--g6", metavar="STRING", help="graph6 string")


def _search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("labeled", "iso"), default="iso")
    p.add_argument("--threads", type=int, help=f"worker processes (default: ${{FOREST_TURAN_THREADS}} or 1)")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--unsafe", action="store_true", help="lift the default vertex caps")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forest-turan", allow_abbrev=False, description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, allow_abbrev=False)
        p.set_defaults(func=func)
        return p

    p = add("formula", cmd_formula, "closed-form maximum r-star count")
    p.add_argument("--forest", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("construct", cmd_construct, "extremal graph for a forest")
    p.add_argument("--forest", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--json", action="store_true", help="edge-list JSON instead of graph6")

    p = add("family", cmd_family, "build a named graph family")
    p.add_argument("--name", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--t1", type=int, default=0)
    p.add_argument("--t2", type=int, default=0)
    p.add_argument("--h", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--forest")
    p.add_argument("--r", type=int, help="also print closed-form and direct r-star counts")
    p.add_argument("--out", default="-")
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect-match", action="store_true")

    p = add("count-stars", cmd_count_stars, "sum over vertices of C(deg, r)")
    _graph_input(p)
    p.add_argument("--r", type=int, required=True)

    p = add("count-copies", cmd_count_copies, "number of subgraphs isomorphic to J")
    _graph_input(p)
    p.add_argument("--j", required=True, help="star:R | clique:S | kstar:S,T | path:K | g6:<string>")

    p = add("contains", cmd_contains, "does the graph contain the linear forest")
    _graph_input(p)
    p.add_argument("--forest", required=True)
    p.add_argument("--json", action="store_true")

    p = add("shift", cmd_shift, "ij-shift a graph, or shift to a fixpoint")
    _graph_input(p)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--closure", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("brute", cmd_brute, "exhaustive ex(n, J, F)")
    p.add_argument("--forest", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--j")
    p.add_argument("--expect-match", action="store_true")
    _search_flags(p)

    p = add("threshold", cmd_threshold, "brute force vs closed form over a range of n")
    p.add_argument("--forest", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--expect-match", action="store_true")
    _search_flags(p)

    p = add("verify-lemma1", cmd_verify_lemma1, "min-degree classification desk check for P_a ∪ P_b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expect-match", action="store_true")
    _search_flags(p)

    p = add("explore", cmd_explore, "probe the open problem for another pattern J")
    p.add_argument("--j", required=True)
    p.add_argument("--forest", required=True)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    _search_flags(p)

    return parser


def run(argv: Optional[Sequence[str]] = None, stdout: TextIO = sys.stdout, stdin: TextIO = sys.stdin,
        stderr: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, stdout, stdin)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except BadGraphInput as exc:
        stderr.write(f"bad graph input: {exc}\n")
        return EXIT_BAD_GRAPH
    except ConstructionError as exc:
        stderr.write(f"constraint violation: {exc}\n")
        return EXIT_CONSTRAINT
    except ValueError as exc:
        stderr.write(f"constraint violation: {exc}\n")
        return EXIT_CONSTRAINT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
