"""Exhaustive search over forest-free graphs.

Two enumeration modes:

* ``labeled`` walks all 2^C(n,2) labeled graphs and filters them; it is the
  slow, obviously-correct oracle.
* ``iso`` extends every forest-free representative on n-1 vertices by one
  vertex in all possible ways, drops extensions that contain the forest
  (freeness is hereditary, so nothing is lost) and keeps one canonical
  representative per isomorphism class.

Levels are sorted by canonical key, so results never depend on the number of
worker processes.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .constructions import FamilyParams, build_extremal, build_family, extremal_graph, star_formula
from .forest import ForestSpec, is_forest_free
from .graph import (
    CanonicalForm,
    Graph,
    canonical_form,
    canonicalize,
    from_graph6,
    is_isomorphic,
    is_subgraph_of,
    to_graph6,
)
from .patterns import PatternGraph
from .shifting import random_graph, shift

LABELED_MAX_N = 7
ISO_MAX_N = 9
THREADS_ENV = "FOREST_TURAN_THREADS"


class BudgetExceeded(RuntimeError):
    """The requested search is outside the configured budget; partial results are unusable."""


def default_workers() -> int:
    value = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


@dataclass(frozen=True)
class EnumerationBudget:
    mode: str = "iso"
    max_n: Optional[int] = None
    workers: int = 1
    node_limit: Optional[int] = None
    unsafe: bool = False

    def __post_init__(self) -> None:
        if self.mode not in ("labeled", "iso"):
            raise ValueError(f"mode must be 'labeled' or 'iso', got {self.mode!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def limit(self) -> int:
        cap = LABELED_MAX_N if self.mode == "labeled" else ISO_MAX_N
        if self.max_n is None:
            return cap
        return self.max_n if self.unsafe else min(self.max_n, cap)

    def check(self, n: int) -> None:
        if n > self.limit:
            raise BudgetExceeded(
                f"n={n} exceeds the {self.mode} budget of {self.limit} vertices (use unsafe to override)"
            )


# enumeration -------------------------------------------------------------------


def _free(g: Graph, forest: Optional[ForestSpec]) -> bool:
    return forest is None or is_forest_free(g, forest)


def _extend_chunk(args: tuple[Sequence[Graph], Optional[ForestSpec]]) -> list[tuple[CanonicalForm, Graph]]:
    parents, forest = args
    seen: dict[CanonicalForm, Optional[Graph]] = {}
    for parent in parents:
        for mask in range(1 << parent.n):
            child = parent.extend(mask)
            key, canon = canonicalize(child)
            if key in seen:
                continue
            seen[key] = canon if _free(canon, forest) else None
    return [(k, g) for k, g in seen.items() if g is not None]


def _next_level(
    parents: list[Graph], forest: Optional[ForestSpec], budget: EnumerationBudget, counter: list[int]
) -> list[Graph]:
    if parents:
        counter[0] += len(parents) << parents[0].n
    if budget.node_limit is not None and counter[0] > budget.node_limit:
        raise BudgetExceeded(f"node limit {budget.node_limit} exceeded")
    workers = budget.workers
    if workers == 1 or len(parents) < 2 * workers:
        found = _extend_chunk((parents, forest))
    else:
        chunks = [parents[i::workers * 4] for i in range(workers * 4)]
        found = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extend_chunk, [(c, forest) for c in chunks if c]):
                found.extend(part)
    merged: dict[CanonicalForm, Graph] = {}
    for key, g in found:
        merged.setdefault(key, g)
    return [merged[k] for k in sorted(merged)]


def free_levels(n_max: int, forest: Optional[ForestSpec], budget: EnumerationBudget) -> list[list[Graph]]:
    """Canonical representatives of all forest-free graphs on 0..n_max vertices."""
    budget.check(n_max)
    counter = [0]
    levels = [[Graph.empty(0)] if _free(Graph.empty(0), forest) else []]
    for _ in range(n_max):
        levels.append(_next_level(levels[-1], forest, budget, counter))
    return levels


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices."""
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        k = 0
        while m:
            if m & 1:
                u, v = pairs[k]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            k += 1
        yield Graph._unchecked(n, tuple(rows))


def enumerate_free_graphs(n: int, forest: Optional[ForestSpec], budget: EnumerationBudget) -> Iterator[Graph]:
    """Stream forest-free graphs on n vertices (``forest=None`` disables pruning)."""
    budget.check(n)
    if budget.mode == "labeled":
        if budget.node_limit is not None and 1 << (n * (n - 1) // 2) > budget.node_limit:
            raise BudgetExceeded(f"node limit {budget.node_limit} exceeded")
        return (g for g in labeled_graphs(n) if _free(g, forest))
    return iter(free_levels(n, forest, budget)[n])


# extremal reports -------------------------------------------------------------


@dataclass
class ExtremalReport:
    n: int
    pattern: PatternGraph
    forest: ForestSpec
    max_count: int
    extremal_graphs: list[str]
    formula_value: Optional[int] = None
    matches_formula: Optional[bool] = None
    matches_construction: Optional[bool] = None
    outside_hypotheses: bool = False
    mode: str = "iso"

    @property
    def r_or_j(self):
        return self.pattern.params[0] if self.pattern.kind == "star" else self.pattern.text

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "forest": self.forest.text,
            "r_or_J": self.r_or_j,
            "brute": self.max_count,
            "formula": self.formula_value,
            "match": self.matches_formula,
            "extremal": list(self.extremal_graphs),
            "iso_to_construction": self.matches_construction,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _construction_fits(forest: ForestSpec, n: int) -> bool:
    return all(k >= 2 for k in forest.parts) and n >= forest.order


def _report(n: int, pattern: PatternGraph, forest: ForestSpec, graphs: Iterable[Graph], mode: str) -> ExtremalReport:
    count = pattern.counter()
    best = -1
    winners: list[Graph] = []
    for g in graphs:
        c = count(g)
        if c > best:
            best, winners = c, [g]
        elif c == best:
            winners.append(g)
    classes: dict[CanonicalForm, Graph] = {}
    for g in winners:
        key, canon = canonicalize(g)
        classes.setdefault(key, canon)
    extremal = [classes[k] for k in sorted(classes)]
    report = ExtremalReport(n, pattern, forest, best, [to_graph6(g) for g in extremal], mode=mode)
    fits = _construction_fits(forest, n)
    if pattern.kind == "star" and fits:
        r = pattern.params[0]
        if r >= 2:
            report.formula_value = star_formula(forest, n, r)
        elif r == 1:
            # the degree-sum formula counts each edge from both ends
            report.formula_value = star_formula(forest, n, 1) // 2
            report.outside_hypotheses = True
        if report.formula_value is not None:
            report.matches_formula = best == report.formula_value
    if fits:
        target = canonical_form(build_extremal(forest, n))
        report.matches_construction = list(classes) == [target]
    return report


def brute_force_ex(n: int, pattern: PatternGraph, forest: ForestSpec, budget: EnumerationBudget) -> ExtremalReport:
    """Maximum number of copies of ``pattern`` over ``forest``-free graphs on n vertices."""
    return _report(n, pattern, forest, enumerate_free_graphs(n, forest, budget), budget.mode)


def brute_force_range(
    ns: Sequence[int], pattern: PatternGraph, forest: ForestSpec, budget: EnumerationBudget
) -> list[ExtremalReport]:
    """``brute_force_ex`` for several n, sharing one level-by-level enumeration in iso mode."""
    if not ns:
        return []
    if budget.mode == "labeled":
        return [brute_force_ex(n, pattern, forest, budget) for n in ns]
    levels = free_levels(max(ns), forest, budget)
    return [_report(n, pattern, forest, levels[n], budget.mode) for n in ns]


# thresholds ---------------------------------------------------------------------


@dataclass(frozen=True)
class ThresholdRow:
    n: int
    brute: int
    formula: Optional[int]
    match: bool
    unique_and_iso: bool


@dataclass
class ThresholdReport:
    forest: ForestSpec
    r: int
    n_max: int
    rows: list[ThresholdRow]
    threshold: Optional[int]
    outside_hypotheses: bool = False
    reports: list[ExtremalReport] = field(default_factory=list, repr=False)

    @property
    def status(self) -> str:
        if self.threshold is None:
            return f"inconclusive at n_max={self.n_max}"
        return f"agreement for all n in [{self.threshold}, {self.n_max}]"

    def to_dict(self) -> dict:
        return {
            "forest": self.forest.text,
            "r": self.r,
            "n_max": self.n_max,
            "threshold": self.threshold,
            "status": self.status,
            "outside_hypotheses": self.outside_hypotheses,
            "rows": [
                {
                    "n": row.n,
                    "brute": row.brute,
                    "formula": row.formula,
                    "match": row.match,
                    "unique_and_iso": row.unique_and_iso,
                }
                for row in self.rows
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "brute", "formula", "match", "unique_and_iso"])
        for row in self.rows:
            writer.writerow([row.n, row.brute, row.formula, row.match, row.unique_and_iso])
        return buf.getvalue()


def find_threshold(forest: ForestSpec, r: int, n_max: int, budget: EnumerationBudget) -> ThresholdReport:
    """Compare brute force with the closed form for n = order(F) .. n_max.

    The threshold is the smallest n0 such that every n in [n0, n_max] agrees
    in value and has the construction as its unique extremal graph.
    ``r = 1`` runs in diagnostic mode, outside the closed form's range.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    forest.require_path_orders()
    ns = list(range(forest.order, n_max + 1))
    reports = brute_force_range(ns, PatternGraph.star(r), forest, budget)
    rows = [
        ThresholdRow(rep.n, rep.max_count, rep.formula_value, bool(rep.matches_formula), bool(rep.matches_construction))
        for rep in reports
    ]
    threshold = None
    for row in reversed(rows):
        if row.match and row.unique_and_iso:
            threshold = row.n
        else:
            break
    return ThresholdReport(forest, r, n_max, rows, threshold, r < 2, reports)


# classification desk check ----------------------------------------------------------


@dataclass
class ClassificationReport:
    a: int
    b: int
    n: int
    h: int
    free_graphs: int
    candidates: int
    uncovered: list[str]
    relaxed_only: list[str]
    case_hits: dict[int, int]
    uncovered_connected: list[str] = field(default_factory=list)

    @property
    def vacuous_order(self) -> bool:
        """True when n < a + b, so every graph on n vertices is forest-free."""
        return self.n < self.a + self.b

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "h": self.h,
            "free_graphs": self.free_graphs,
            "min_degree_candidates": self.candidates,
            "uncovered": list(self.uncovered),
            "uncovered_connected": list(self.uncovered_connected),
            "relaxed_only": list(self.relaxed_only),
            "case_hits": {str(k): v for k, v in sorted(self.case_hits.items())},
            "n_below_forest_order": self.vacuous_order,
        }


def _order_solutions(n: int, h: int, h1_extra: int) -> list[tuple[int, int]]:
    # (t1, t2) >= 0 with t1*h + (t2 + h1_extra)*(h + 1) + 1 == n
    out = []
    for t2 in range(n + 1):
        rest = n - 1 - (t2 + h1_extra) * (h + 1)
        if rest < 0:
            break
        if rest % h == 0:
            out.append((rest // h, t2))
    return out


def classification_hosts(a: int, b: int, n: int) -> list[tuple[int, str, Graph]]:
    """The exceptional families for P_a ∪ P_b on n vertices as (case, relation, graph).

    ``relation`` is ``"sub"`` for containment cases and ``"iso"`` for
    isomorphism cases.
    """
    forest = ForestSpec((a, b))
    h = forest.h
    pair = {a, b}
    hosts: list[tuple[int, str, Graph]] = []
    try:
        hosts.append((1, "sub", extremal_graph(forest, n)))
    except ValueError:
        pass
    if h >= 1 and (n - 1) % h == 0:
        l_th = build_family(FamilyParams("L", t1=(n - 1) // h, h=h))
        if a % 2 == 0 and b % 2 == 0 and a == b:
            hosts.append((2, "iso", l_th))
        if abs(a - b) == 1:
            hosts.append((3, "iso", l_th))
        if a % 2 and b % 2 and abs(a - b) == 2:
            hosts.append((4, "iso", l_th))
    both_odd_equal = a % 2 == 1 and b % 2 == 1 and a == b
    if both_odd_equal and h >= 1:
        if n == 3 * h + 3:
            hosts.append((5, "iso", build_family(FamilyParams("U3h", h=h))))
        for t1, t2 in _order_solutions(n, h, 0):
            hosts.append((6, "sub", build_family(FamilyParams("L", t1=t1, t2=t2, h=h))))
        for t1, t2 in _order_solutions(n, h, 1):
            hosts.append((7, "sub", build_family(FamilyParams("Fg", t1=t1, t2=t2, h=h))))
        if h >= 2:
            for t1, t2 in _order_solutions(n, h, 2):
                hosts.append((8, "sub", build_family(FamilyParams("Tg", t1=t1, t2=t2, h=h))))
    if n % 2 == 0 and n >= 2 and pair in ({6, 3}, {7, 3}):
        hosts.append((9, "sub", build_family(FamilyParams("book2", n=n))))
    if n % 2 == 1 and n >= 3 and pair == {9, 3}:
        hosts.append((10, "sub", build_family(FamilyParams("book3", n=n))))
    if pair == {5, 3}:
        if n >= 7:
            hosts.append((11, "sub", build_family(FamilyParams("H1", n=n))))
        if n >= 9:
            hosts.append((11, "sub", build_family(FamilyParams("H2", n=n))))
    return hosts


def verify_classification(a: int, b: int, n: int, budget: EnumerationBudget) -> ClassificationReport:
    """Check every P_a ∪ P_b-free graph on n vertices with min degree >= h against the exceptional cases."""
    if a < 2 or b < 2:
        raise ValueError("path orders must be >= 2")
    forest = ForestSpec((a, b))
    h = forest.h
    hosts = classification_hosts(a, b, n)
    graphs = list(enumerate_free_graphs(n, forest, budget))
    if budget.mode == "labeled":
        dedup: dict[CanonicalForm, Graph] = {}
        for g in graphs:
            key, canon = canonicalize(g)
            dedup.setdefault(key, canon)
        graphs = [dedup[k] for k in sorted(dedup)]
    candidates = [g for g in graphs if n == 0 or g.min_degree() >= h]
    uncovered: list[str] = []
    relaxed_only: list[str] = []
    hits: dict[int, int] = {}
    for g in candidates:
        strict = [case for case, rel, host in hosts if (is_isomorphic(g, host) if rel == "iso" else is_subgraph_of(g, host))]
        if strict:
            for case in sorted(set(strict)):
                hits[case] = hits.get(case, 0) + 1
            continue
        if any(rel == "iso" and is_subgraph_of(g, host) for _, rel, host in hosts):
            relaxed_only.append(to_graph6(g))
        else:
            uncovered.append(to_graph6(g))
    connected = [s for s in uncovered if from_graph6(s).is_connected()]
    return ClassificationReport(a, b, n, h, len(graphs), len(candidates), uncovered, relaxed_only, hits, connected)


# open-problem probe ------------------------------------------------------------------


@dataclass(frozen=True)
class ShiftViolation:
    graph: str
    i: int
    j: int
    before: int
    after: int


@dataclass
class ExtremalProbeReport:
    pattern: PatternGraph
    forest: ForestSpec
    probe_graphs: int
    probe_pairs: int
    violations: list[ShiftViolation]
    rows: list[ExtremalReport]

    @property
    def answer(self) -> str:
        decided = [row.matches_construction for row in self.rows if row.matches_construction is not None]
        if not decided:
            return "undecided"
        return "yes" if all(decided) else "no"

    def to_dict(self) -> dict:
        return {
            "J": self.pattern.text,
            "forest": self.forest.text,
            "premise": {
                "graphs": self.probe_graphs,
                "pairs": self.probe_pairs,
                "violations": [
                    {"graph": v.graph, "i": v.i, "j": v.j, "before": v.before, "after": v.after}
                    for v in self.violations
                ],
            },
            "rows": [row.to_dict() for row in self.rows],
            "answer": self.answer,
        }


def shifting_premise_probe(
    pattern: PatternGraph, samples: int, seed: int, n_range: tuple[int, int] = (4, 8)
) -> tuple[int, int, list[ShiftViolation]]:
    """Look for random graphs where some ij-shift lowers the number of copies of ``pattern``."""
    rng = random.Random(seed)
    count = pattern.counter()
    pairs = 0
    violations: list[ShiftViolation] = []
    for s in range(samples):
        n = rng.randint(*n_range)
        density = (0.2, 0.5, 0.8)[s % 3]
        g = random_graph(n, density, rng)
        before = count(g)
        for i in range(n):
            for j in range(i + 1, n):
                pairs += 1
                after = count(shift(g, i, j))
                if after < before:
                    violations.append(ShiftViolation(to_graph6(g), i, j, before, after))
    return samples, pairs, violations


def explore_problem1(
    pattern: PatternGraph,
    forest: ForestSpec,
    ns: Sequence[int],
    budget: EnumerationBudget,
    seed: int = 0,
    samples: int = 200,
) -> ExtremalProbeReport:
    """Test the shifting premise for ``pattern`` and whether the extremal graphs match the construction."""
    graphs, pairs, violations = shifting_premise_probe(pattern, samples, seed)
    rows = brute_force_range(list(ns), pattern, forest, budget)
    return ExtremalProbeReport(pattern, forest, graphs, pairs, violations, rows)
