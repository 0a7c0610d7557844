import itertools

import pytest

from oracles import degree_sum_stars, naive_contains_forest
from forest_turan.constructions import (
    ConstructionError,
    FamilyParams,
    build_extremal,
    build_family,
    family_star_count,
    star_formula,
    theorem_value,
)
from forest_turan.forest import ForestSpec, contains_forest, parse_forest
from forest_turan.graph import Graph, binomial, copies, count_stars, disjoint_union, is_isomorphic, join

K2 = Graph.complete(2)

BATTERY = ["2,2", "3,2", "3,3", "4,2", "5,3", "4,4", "3,3,3", "5,5", "6,3,2", "7,3", "2,2,2", "3,3,3,3"]


class TestExtremal:
    def test_examples(self):
        assert is_isomorphic(build_extremal(parse_forest("4,2"), 10), join(K2, Graph.empty(8)))
        assert is_isomorphic(
            build_extremal(parse_forest("5,3"), 10), join(K2, disjoint_union(Graph.empty(6), K2))
        )
        assert is_isomorphic(build_extremal(parse_forest("3,3"), 9), join(Graph.complete(1), copies(K2, 4)))

    def test_tp3_odd_remainder_leaves_isolated_vertex(self):
        g = build_extremal(parse_forest("3,3,3"), 11)
        assert sorted(g.degrees()) == [2] + [3] * 8 + [10, 10]

    def test_all_odd_extra_edge_endpoints(self):
        # the extra K_2 sits in the independent side, so its ends have degree h + 1
        for text in ("5,3", "7,3", "5,5"):
            f = parse_forest(text)
            g = build_extremal(f, 14)
            assert sorted(g.degrees()).count(f.h + 1) == 2

    @pytest.mark.parametrize("text", BATTERY)
    def test_formula_matches_direct_count(self, text):
        f = parse_forest(text)
        for n in range(f.order + 1, 61):
            g = build_extremal(f, n)
            for r in range(2, 6):
                assert theorem_value(f, n, r) == count_stars(g, r) == degree_sum_stars(g, r)

    @pytest.mark.parametrize("text", BATTERY)
    def test_freeness(self, text):
        f = parse_forest(text)
        for n in range(f.order, 26):
            assert not contains_forest(build_extremal(f, n), f)

    @pytest.mark.parametrize("text", ["2,2", "3,2", "3,3", "4,2", "2,2,2"])
    def test_freeness_against_naive_oracle(self, text):
        f = parse_forest(text)
        for n in range(f.order, 9):
            assert not naive_contains_forest(build_extremal(f, n), f.parts)

    @pytest.mark.parametrize("text", ["2,2", "4,2", "3,3", "5,3"])
    def test_one_more_edge_creates_the_forest(self, text):
        # the constructions are edge-maximal at moderate n
        f = parse_forest(text)
        g = build_extremal(f, 12)
        for u, v in itertools.combinations(range(g.n), 2):
            if not g.has_edge(u, v):
                assert contains_forest(g.add_edges([(u, v)]), f)

    def test_single_path_reduces_to_path_bound(self):
        # t = 1: h = floor(k/2) - 1 and the extra edge appears for odd k
        for k in range(4, 9):
            f = ForestSpec((k,))
            h = k // 2 - 1
            n = 20
            expected = h * binomial(n - 1, 3) + (n - h) * binomial(h, 3) + 2 * (k % 2) * binomial(h, 2)
            assert star_formula(f, n, 3) == expected

    def test_errors(self):
        with pytest.raises(ConstructionError):
            build_extremal(parse_forest("4,2"), 5)
        with pytest.raises(ConstructionError):
            build_extremal(parse_forest("3,1"), 8)
        with pytest.raises(ValueError):
            theorem_value(parse_forest("4,2"), 10, 1)


class TestClosedForm:
    @pytest.mark.parametrize("text,n,r,value", [("4,2", 10, 2, 80), ("3,5", 10, 2, 84), ("3,3", 9, 2, 36)])
    def test_examples(self, text, n, r, value):
        assert theorem_value(parse_forest(text), n, r) == value

    def test_all_odd_identity(self):
        # (n-h) C(h,r) + 2 C(h,r-1) rewrites as (n-h-2) C(h,r) + 2 C(h+1,r)
        for h in range(0, 8):
            for n in range(h + 2, 30):
                for r in range(1, 7):
                    lhs = (n - h) * binomial(h, r) + 2 * binomial(h, r - 1)
                    rhs = (n - h - 2) * binomial(h, r) + 2 * binomial(h + 1, r)
                    assert lhs == rhs


class TestFamilies:
    def test_degree_audits(self):
        l_graph = build_family(FamilyParams("L", t1=2, t2=0, h=3))
        assert l_graph.n == 7 and sorted(l_graph.degrees()) == [3] * 6 + [6]
        u = build_family(FamilyParams("U3h", h=2))
        assert u.n == 9 and sorted(u.degrees()) == [2] * 6 + [4] * 3
        h1 = build_family(FamilyParams("H1", n=7))
        assert sorted(h1.degrees(), reverse=True) == [6, 4, 2, 2, 2, 2, 2]

    @pytest.mark.parametrize(
        "params,value",
        [
            (FamilyParams("L", t1=2, t2=0, h=3), 33),
            (FamilyParams("U3h", h=2), 24),
            (FamilyParams("book2", n=10), 96),
        ],
    )
    def test_examples(self, params, value):
        assert family_star_count(params, 2) == value == count_stars(build_family(params), 2)

    def test_displayed_formulas_sweep(self):
        for h in range(2, 6):
            for t1, t2 in itertools.product(range(4), repeat=2):
                for fam in ("L", "Fg", "Tg"):
                    p = FamilyParams(fam, t1=t1, t2=t2, h=h)
                    g = build_family(p)
                    assert g.n == p.order
                    for r in range(2, 6):
                        assert family_star_count(p, r) == count_stars(g, r), (p, r)
            p = FamilyParams("U3h", h=h)
            for r in range(2, 6):
                assert family_star_count(p, r) == count_stars(build_family(p), r)

    def test_books_and_h_families(self):
        for n in range(2, 31):
            fam = "book2" if n % 2 == 0 else "book3"
            if n < 3 and fam == "book3":
                continue
            p = FamilyParams(fam, n=n)
            for r in range(2, 6):
                assert family_star_count(p, r) == count_stars(build_family(p), r)
        for n in range(7, 31):
            for fam in ("H1", "H2"):
                if fam == "H2" and n < 9:
                    continue
                p = FamilyParams(fam, n=n)
                g = build_family(p)
                assert g.n == n
                for r in range(2, 6):
                    assert family_star_count(p, r) == count_stars(g, r)

    def test_h2_structure(self):
        g = build_family(FamilyParams("H2", n=9))
        assert sorted(g.degrees(), reverse=True) == [6, 6] + [2] * 7
        assert g.is_connected()

    @pytest.mark.parametrize(
        "params",
        [
            FamilyParams("Tg", t1=1, h=1),
            FamilyParams("L", t1=-1, h=2),
            FamilyParams("H1", n=6),
            FamilyParams("H2", n=8),
            FamilyParams("book2", n=9),
            FamilyParams("book3", n=10),
            FamilyParams("gtp3", n=9),
            FamilyParams("L", t1=20, t2=0, h=4),
        ],
    )
    def test_constraint_violations(self, params):
        with pytest.raises(ConstructionError):
            build_family(params)

    def test_unknown_family(self):
        with pytest.raises(ConstructionError):
            FamilyParams("wheel", n=5)
