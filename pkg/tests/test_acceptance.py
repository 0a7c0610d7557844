"""Acceptance criteria 1-9, one test each.

Every test appends a single ``[ACCEPT k] PASS|FAIL`` line (printed in the
terminal summary) and also prints it, so ``pytest -s`` shows them inline.
"""

import random
import time
from contextlib import contextmanager

import conftest
from oracles import orbit_class_count
from forest_turan.constructions import FamilyParams, build_extremal, build_family, family_star_count, theorem_value
from forest_turan.forest import contains_forest, parse_forest
from forest_turan.graph import Graph, canonical_form, count_stars, from_graph6, is_isomorphic
from forest_turan.patterns import PatternGraph
from forest_turan.search import (
    EnumerationBudget,
    brute_force_ex,
    explore_problem1,
    find_threshold,
    free_levels,
    verify_classification,
)
from forest_turan.shifting import random_graph, shift, shift_delta

BATTERY = ["2,2", "3,2", "3,3", "4,2", "5,3", "4,4", "3,3,3", "5,5", "6,3,2", "7,3", "2,2,2", "3,3,3,3"]


@contextmanager
def criterion(k, title, limit_s):
    info = {"detail": ""}
    start = time.perf_counter()
    try:
        yield info
        elapsed = time.perf_counter() - start
        assert elapsed < limit_s, f"took {elapsed:.1f}s, limit {limit_s}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        line = f"[ACCEPT {k}] FAIL {title} ({elapsed:.2f}s): {exc}"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    detail = f" {info['detail']}" if info["detail"] else ""
    line = f"[ACCEPT {k}] PASS {title} ({elapsed:.2f}s){detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


def test_accept_1_formula_construction_identity():
    with criterion(1, "formula equals direct star count of the construction", 10) as info:
        checked = 0
        for text in BATTERY:
            f = parse_forest(text)
            for n in range(f.order + 1, 61):
                g = build_extremal(f, n)
                for r in range(2, 6):
                    assert theorem_value(f, n, r) == count_stars(g, r), (text, n, r)
                    checked += 1
        info["detail"] = f"{len(BATTERY)} forests, {checked} cases"


def test_accept_2_construction_freeness():
    with criterion(2, "constructions are forest-free up to n=25", 60) as info:
        checked = 0
        for text in BATTERY:
            f = parse_forest(text)
            for n in range(f.order + 1, 26):
                assert not contains_forest(build_extremal(f, n), f), (text, n)
                checked += 1
        info["detail"] = f"{checked} graphs"


def test_accept_3_shifting():
    with criterion(3, "shift delta matches closed form and is nonnegative", 60) as info:
        rnd = random.Random(2026)
        cases = 0
        for _ in range(1000):
            g = random_graph(rnd.randint(2, 10), rnd.uniform(0.05, 0.95), rnd)
            for i in range(g.n):
                for j in range(i + 1, g.n):
                    s = shift(g, i, j)
                    for r in (2, 3, 4):
                        measured = count_stars(s, r) - count_stars(g, r)
                        assert measured == shift_delta(g, i, j, r).delta_r, (g, i, j, r)
                        assert measured >= 0
                        cases += 1
        info["detail"] = f"{cases} (graph, i, j, r) cases"


def test_accept_4_desk_scale_brute_force():
    with criterion(4, "labeled brute force at n=5 and n=6", 120) as info:
        budget = EnumerationBudget("labeled")
        rep = brute_force_ex(5, PatternGraph.star(2), parse_forest("2,2"), budget)
        assert rep.max_count == 6 and len(rep.extremal_graphs) == 1
        assert is_isomorphic(from_graph6(rep.extremal_graphs[0]), Graph.star(4))
        rep = brute_force_ex(6, PatternGraph.star(1), parse_forest("2,2,2"), budget)
        k5_k1 = Graph.from_edges(6, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        assert rep.max_count == 10 and rep.formula_value == 9 and rep.matches_formula is False
        assert len(rep.extremal_graphs) == 1 and is_isomorphic(from_graph6(rep.extremal_graphs[0]), k5_k1)
        info["detail"] = "max 6 (K_1,4 unique); max 10 vs formula 9 (K_5+K_1)"


def test_accept_5_threshold_reports():
    with criterion(5, "threshold reports for 2,2 3,2 3,3 4,2 at r=2, n_max=8", 30 * 60) as info:
        budget = EnumerationBudget("iso")
        summary = []
        for text in ("2,2", "3,2", "3,3", "4,2"):
            f = parse_forest(text)
            report = find_threshold(f, 2, 8, budget)
            for row, rep in zip(report.rows, report.reports):
                if row.match and row.unique_and_iso:
                    assert rep.max_count == theorem_value(f, row.n, 2)
                    assert len(rep.extremal_graphs) == 1
                    target = build_extremal(f, row.n)
                    assert canonical_form(from_graph6(rep.extremal_graphs[0])) == canonical_form(target)
            summary.append(f"{text}:{report.threshold}")
        info["detail"] = "thresholds " + " ".join(summary)


def test_accept_6_family_formulas():
    with criterion(6, "special family closed forms", 10) as info:
        checked = 0
        for h in range(2, 6):
            for t1 in range(4):
                for t2 in range(4):
                    for fam in ("L", "Fg", "Tg"):
                        p = FamilyParams(fam, t1=t1, t2=t2, h=h)
                        g = build_family(p)
                        for r in range(2, 6):
                            assert family_star_count(p, r) == count_stars(g, r), (p, r)
                            checked += 1
            for r in range(2, 6):
                p = FamilyParams("U3h", h=h)
                assert family_star_count(p, r) == count_stars(build_family(p), r)
                checked += 1
        for n in range(3, 41):
            p = FamilyParams("book2" if n % 2 == 0 else "book3", n=n)
            g = build_family(p)
            for r in range(2, 6):
                assert family_star_count(p, r) == count_stars(g, r), (p, r)
                checked += 1
        info["detail"] = f"{checked} cases"


def test_accept_7_min_degree_classification():
    with criterion(7, "classification desk check completes", 30 * 60) as info:
        budget = EnumerationBudget("iso")
        findings = []
        for a, b, n in [(2, 2, 5), (3, 2, 6), (4, 4, 7), (3, 5, 8)]:
            report = verify_classification(a, b, n, budget)
            note = "vacuous" if report.vacuous_order else f"connected {len(report.uncovered_connected)}"
            findings.append(f"({a},{b},{n}) uncovered={len(report.uncovered)} [{note}]")
        info["detail"] = "; ".join(findings)


def test_accept_8_enumeration_sanity():
    with criterion(8, "unpruned class counts for n=1..7", 5 * 60) as info:
        expected = [1, 2, 4, 11, 34, 156, 1044]
        levels = free_levels(7, None, EnumerationBudget("iso"))
        found = [len(levels[n]) for n in range(1, 8)]
        oracle = [orbit_class_count(n) for n in range(1, 8)]
        assert oracle == expected, oracle
        assert found == expected, found
        info["detail"] = ",".join(map(str, found))


def test_accept_9_extremal_structure_probe():
    with criterion(9, "extremal structure probe for other patterns", 30 * 60) as info:
        budget = EnumerationBudget("iso")
        edges = explore_problem1(PatternGraph.clique(2), parse_forest("2,2"), range(5, 8), budget)
        assert edges.answer == "yes"
        assert all(row.matches_construction for row in edges.rows)
        triangles = explore_problem1(PatternGraph.clique(3), parse_forest("4,2"), range(6, 9), budget)
        assert triangles.answer in ("yes", "no", "undecided")
        assert len(triangles.rows) == 3
        info["detail"] = f"clique:2 answer={edges.answer}; clique:3 with 4,2 answer={triangles.answer} (recorded)"
