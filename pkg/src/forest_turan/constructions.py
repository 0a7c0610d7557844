"""Extremal constructions, the special graph families, and their star counts.

Layout convention: hub / clique / center vertices come first (center is
vertex 0 for the L, F and T families), then attached cliques or pairs, then
independent vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .forest import ForestSpec
from .graph import Graph, binomial, copies, disjoint_union, join

FAMILIES = ("gf", "gtp3", "L", "Fg", "Tg", "U3h", "H1", "H2", "book2", "book3")


class ConstructionError(ValueError):
    """A family parameter violates its constraints."""


def _hub_join(h: int, rest: Graph) -> Graph:
    return join(Graph.complete(h), rest)


def extremal_graph(forest: ForestSpec, n: int) -> Graph:
    """G_F(n) (or G_{tP3}(n)) without the order check; needs n >= h (+2 when all odd)."""
    h = forest.h
    if forest.is_tP3:
        pairs, single = divmod(n - h, 2)
        return _hub_join(h, disjoint_union(copies(Graph.complete(2), pairs), Graph.empty(single)))
    if forest.eta:
        if n - h - 2 < 0:
            raise ConstructionError(f"n={n} too small for K_{h} joined with an extra edge")
        return _hub_join(h, disjoint_union(Graph.complete(2), Graph.empty(n - h - 2)))
    if n - h < 0:
        raise ConstructionError(f"n={n} smaller than the hub size {h}")
    return _hub_join(h, Graph.empty(n - h))


def build_extremal(forest: ForestSpec, n: int) -> Graph:
    """The extremal graph for ``forest`` on ``n`` vertices.

    K_h ∨ (n-h)K_1 when some path has even order, K_h ∨ ((n-h-2)K_1 ∪ K_2)
    when all orders are odd, and for t copies of P_3 the hubs are joined to a
    perfect matching (plus one isolated vertex when n - h is odd).
    """
    try:
        forest.require_path_orders()
    except ValueError as exc:
        raise ConstructionError(str(exc)) from None
    if n < forest.order:
        raise ConstructionError(f"n={n} is smaller than the forest order {forest.order}")
    return extremal_graph(forest, n)


def theorem_value(forest: ForestSpec, n: int, r: int) -> int:
    """Closed-form maximum number of r-stars in an n-vertex ``forest``-free graph."""
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    try:
        forest.require_path_orders()
    except ValueError as exc:
        raise ConstructionError(str(exc)) from None
    if n < forest.order:
        raise ConstructionError(f"n={n} is smaller than the forest order {forest.order}")
    return star_formula(forest, n, r)


def star_formula(forest: ForestSpec, n: int, r: int) -> int:
    """Evaluate the closed form for any r >= 0 (no hypothesis checks)."""
    h = forest.h
    if forest.is_tP3:
        tau = forest.tau(n)
        return (
            h * binomial(n - 1, r)
            + (n - h) * binomial(h + 1, r)
            + tau * (binomial(h, r) - binomial(h + 1, r))
        )
    return h * binomial(n - 1, r) + (n - h) * binomial(h, r) + 2 * forest.eta * binomial(h, r - 1)


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: Optional[int] = None
    t1: int = 0
    t2: int = 0
    h: Optional[int] = None
    t: Optional[int] = None
    forest: Optional[ForestSpec] = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ConstructionError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")

    @property
    def order(self) -> int:
        f, h, t1, t2 = self.family, self.h, self.t1, self.t2
        if f == "L":
            return t1 * h + t2 * (h + 1) + 1
        if f == "Fg":
            return t1 * h + (t2 + 1) * (h + 1) + 1
        if f == "Tg":
            return t1 * h + (t2 + 2) * (h + 1) + 1
        if f == "U3h":
            return 3 * h + 3
        return self.n

    def validate(self) -> None:
        f = self.family
        if f in ("L", "Fg", "Tg", "U3h"):
            if self.h is None or self.h < 1:
                raise ConstructionError(f"{f} needs h >= 1")
            if self.t1 < 0 or self.t2 < 0:
                raise ConstructionError(f"{f} needs t1, t2 >= 0")
            if f == "Tg" and self.h < 2:
                raise ConstructionError("Tg needs h >= 2")
            if self.order > 64:
                raise ConstructionError(f"{f} would have {self.order} > 64 vertices")
            return
        if self.n is None:
            raise ConstructionError(f"{f} needs n")
        if f == "gf":
            if self.forest is None:
                raise ConstructionError("gf needs a forest")
        elif f == "gtp3":
            if self.t is None or self.t < 1:
                raise ConstructionError("gtp3 needs t >= 1")
        elif f == "H1" and self.n < 7:
            raise ConstructionError("H1 needs n >= 7")
        elif f == "H2" and self.n < 9:
            raise ConstructionError("H2 needs n >= 9")
        elif f == "book2" and (self.n < 2 or self.n % 2):
            raise ConstructionError("book2 needs an even n >= 2")
        elif f == "book3" and (self.n < 3 or self.n % 2 == 0):
            raise ConstructionError("book3 needs an odd n >= 3")
        if not 0 <= self.n <= 64:
            raise ConstructionError("n must lie in 0..64")


def _center_join(cliques: list[Graph]) -> Graph:
    return join(Graph.complete(1), disjoint_union(*cliques))


def _L(t1: int, t2: int, h: int) -> Graph:
    return _center_join([Graph.complete(h)] * t1 + [Graph.complete(h + 1)] * t2)


def _with_pendant_cliques(t1: int, t2: int, h: int, extra: int) -> Graph:
    base = _L(t1, t2, h)
    g = disjoint_union(base, *([Graph.complete(h + 1)] * extra))
    links = [(0, base.n + i * (h + 1)) for i in range(extra)]
    return g.add_edges(links)


def _H1(n: int) -> Graph:
    # K_2 ∨ (n-4)K_1 on 0..n-3 (hubs 0 and 1), triangle {0, n-2, n-1}
    g = disjoint_union(_hub_join(2, Graph.empty(n - 4)), Graph.empty(2))
    return g.add_edges([(0, n - 2), (0, n - 1), (n - 2, n - 1)])


def _H2(n: int) -> Graph:
    # In H1_{n-2} vertex 1 is the surviving hub of degree n-5; glue a triangle there.
    base = _H1(n - 2)
    g = disjoint_union(base, Graph.empty(2))
    return g.add_edges([(1, n - 2), (1, n - 1), (n - 2, n - 1)])


def _U3h(h: int) -> Graph:
    g = copies(Graph.complete(h + 1), 3)
    return g.add_edges([(0, h + 1), (h + 1, 2 * h + 2), (0, 2 * h + 2)])


def build_family(p: FamilyParams) -> Graph:
    p.validate()
    f = p.family
    if f == "gf":
        return build_extremal(p.forest, p.n)
    if f == "gtp3":
        return build_extremal(ForestSpec((3,) * p.t), p.n)
    if f == "L":
        return _L(p.t1, p.t2, p.h)
    if f == "Fg":
        return _with_pendant_cliques(p.t1, p.t2, p.h, 1)
    if f == "Tg":
        return _with_pendant_cliques(p.t1, p.t2, p.h, 2)
    if f == "U3h":
        return _U3h(p.h)
    if f == "H1":
        return _H1(p.n)
    if f == "H2":
        return _H2(p.n)
    if f == "book2":
        return _hub_join(2, copies(Graph.complete(2), (p.n - 2) // 2))
    return _hub_join(3, copies(Graph.complete(2), (p.n - 3) // 2))


def family_star_count(p: FamilyParams, r: int) -> int:
    """Closed-form number of r-stars in ``build_family(p)``."""
    p.validate()
    f, h, t1, t2, C = p.family, p.h, p.t1, p.t2, binomial
    if f == "gf":
        return star_formula(p.forest, p.n, r)
    if f == "gtp3":
        return star_formula(ForestSpec((3,) * p.t), p.n, r)
    if f == "L":
        n = p.order
        return t1 * h * C(h, r) + t2 * (h + 1) * C(h + 1, r) + C(n - 1, r)
    if f == "Fg":
        n = p.order
        return (t1 + 1) * h * C(h, r) + (t2 * (h + 1) + 1) * C(h + 1, r) + C(n - h - 1, r)
    if f == "Tg":
        n = p.order
        return (t1 + 2) * h * C(h, r) + (t2 * (h + 1) + 2) * C(h + 1, r) + C(n - 2 * h - 1, r)
    if f == "U3h":
        return 3 * C(h, r) + 6 * C(h, r - 1) + 3 * C(h, r - 2) + 3 * h * C(h, r)
    n = p.n
    if f == "book2":
        return 2 * C(n - 1, r) + (n - 2) * C(3, r)
    if f == "book3":
        return 3 * C(n - 1, r) + (n - 3) * C(4, r)
    if f == "H1":
        # degrees: n-1, n-3, then n-2 vertices of degree 2
        return C(n - 1, r) + C(n - 3, r) + (n - 2) * C(2, r)
    # H2 degrees: two of n-3, then n-2 vertices of degree 2
    return 2 * C(n - 3, r) + (n - 2) * C(2, r)
