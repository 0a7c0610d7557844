"""The ij-shifting operation on graphs and its effect on star counts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, binomial, count_stars, is_isomorphic


def _check_pair(g: Graph, i: int, j: int) -> None:
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise ValueError(f"vertices ({i}, {j}) outside 0..{g.n - 1}")
    if i >= j:
        raise ValueError(f"shifting needs i < j, got i={i}, j={j}")


def shift(g: Graph, i: int, j: int) -> Graph:
    """Move every edge jx to ix unless ix is already an edge of ``g``.

    All membership tests look at the original graph, and the edge ij (if
    present) stays put.
    """
    _check_pair(g, i, j)
    adj = list(g.adj)
    bi, bj = 1 << i, 1 << j
    moving = g.adj[j] & ~g.adj[i] & ~bi
    if not moving:
        return g
    adj[j] &= ~moving
    adj[i] |= moving
    for x in range(g.n):
        if moving >> x & 1:
            adj[x] = (adj[x] & ~bj) | bi
    return Graph._unchecked(g.n, tuple(adj))


@dataclass(frozen=True)
class ShiftDelta:
    """Neighborhood split of the pair (i, j) and the r-star count change.

    ``n_i`` and ``n_j`` count private neighbors other than i and j,
    ``n_ij`` common neighbors, and ``adjacent`` records the edge ij, which
    stays on both endpoints and so acts as one more shared neighbor.
    """

    n_i: int
    n_j: int
    n_ij: int
    adjacent: bool
    r: int
    delta_r: int


def delta_closed_form(n_i: int, n_j: int, shared: int, r: int) -> int:
    """C(n_i+n_j+s, r) + C(s, r) - C(n_i+s, r) - C(n_j+s, r) for ``s`` shared neighbors."""
    C = binomial
    return C(n_i + n_j + shared, r) + C(shared, r) - C(n_i + shared, r) - C(n_j + shared, r)


def shift_delta(g: Graph, i: int, j: int, r: int) -> ShiftDelta:
    _check_pair(g, i, j)
    bi, bj = 1 << i, 1 << j
    ni, nj = g.adj[i] & ~bj, g.adj[j] & ~bi
    n_i = (ni & ~nj).bit_count()
    n_j = (nj & ~ni).bit_count()
    n_ij = (ni & nj).bit_count()
    adjacent = g.has_edge(i, j)
    return ShiftDelta(n_i, n_j, n_ij, adjacent, r, delta_closed_form(n_i, n_j, n_ij + adjacent, r))


def shift_closure(g: Graph) -> Graph:
    """Sweep all pairs i < j in lexicographic order until a sweep changes nothing."""
    while True:
        changed = False
        for i in range(g.n):
            for j in range(i + 1, g.n):
                shifted = shift(g, i, j)
                if shifted != g:
                    g = shifted
                    changed = True
        if not changed:
            return g


def shift_potential(g: Graph) -> int:
    """Sum of label * degree; every effective shift strictly lowers it."""
    return sum(v * d for v, d in enumerate(g.degrees()))


def random_graph(n: int, density: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class EqualityWitness:
    """Counts equal after shifting although the shifted graph is not isomorphic."""

    graph: Graph
    i: int
    j: int
    r: int


def equality_probe(graphs: list[Graph], rs: range) -> Iterator[EqualityWitness]:
    """Yield (G, i, j, r) where the r-star count is unchanged but S_ij(G) is not isomorphic to G."""
    for g in graphs:
        for i in range(g.n):
            for j in range(i + 1, g.n):
                s = shift(g, i, j)
                if s == g:
                    continue
                for r in rs:
                    if count_stars(s, r) == count_stars(g, r) and not is_isomorphic(s, g):
                        yield EqualityWitness(g, i, j, r)
