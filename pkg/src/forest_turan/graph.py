"""Small dense simple graphs stored as adjacency bitrows.

Every vertex ``v`` owns one Python ``int`` whose bit ``u`` is set when ``uv``
is an edge.  Graphs are immutable and hashable; all operations return new
graphs.  Vertex counts are capped at :data:`MAX_VERTICES`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


def binomial(n: int, k: int) -> int:
    """Exact C(n, k), with C(n, k) = 0 whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    # construction -------------------------------------------------------

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # hot paths that preserve symmetry by construction skip validation
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def path(cls, k: int) -> Graph:
        return cls.from_edges(k, [(v, v + 1) for v in range(k - 1)])

    @classmethod
    def cycle(cls, k: int) -> Graph:
        return cls.from_edges(k, [(v, (v + 1) % k) for v in range(k)])

    @classmethod
    def star(cls, r: int) -> Graph:
        """K_{1,r} with the center at vertex 0."""
        return cls.from_edges(r + 1, [(0, v) for v in range(1, r + 1)])

    # queries ------------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    # transformations ----------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph._unchecked(self.n, tuple(rows))

    def add_edges(self, edges: Iterable[Sequence[int]]) -> Graph:
        return Graph.from_edges(self.n, list(self.edges()) + [tuple(e) for e in edges])

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def extend(self, neighbor_mask: int) -> Graph:
        """Append vertex ``n`` adjacent to the vertices in ``neighbor_mask``."""
        v = self.n
        rows = tuple(row | (1 << v) if neighbor_mask >> u & 1 else row for u, row in enumerate(self.adj))
        if neighbor_mask >> v:
            raise ValueError("neighbor mask references a vertex outside the graph")
        return Graph._unchecked(v + 1, rows + (neighbor_mask,))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def join(left: Graph, right: Graph) -> Graph:
    """``left ∨ right``: the union plus every edge between the two sides."""
    lmask = (1 << left.n) - 1
    rmask = ((1 << right.n) - 1) << left.n
    rows = [row | rmask for row in left.adj]
    rows += [(row << left.n) | lmask for row in right.adj]
    return Graph(left.n + right.n, tuple(rows))


def copies(g: Graph, k: int) -> Graph:
    """``k`` disjoint copies of ``g``."""
    return disjoint_union(*([g] * k))


# counting ---------------------------------------------------------------


def count_stars(g: Graph, r: int) -> int:
    """Sum over vertices of C(deg(v), r)."""
    return sum(binomial(d, r) for d in g.degrees())


def _match_order(pattern: Graph) -> list[int]:
    # BFS from a max-degree vertex, per component, so most placements are
    # constrained by an already placed neighbor.
    order: list[int] = []
    seen = 0
    remaining = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    for root in remaining:
        if seen >> root & 1:
            continue
        queue = [root]
        seen |= 1 << root
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(bits(pattern.adj[v] & ~seen), key=lambda x: (-pattern.degree(x), x)):
                seen |= 1 << u
                queue.append(u)
    return order


def _embeddings(pattern: Graph, host: Graph, stop_at_first: bool) -> int:
    """Count injective edge-preserving maps pattern -> host."""
    if pattern.n > host.n:
        return 0
    if pattern.n == 0:
        return 1
    order = _match_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    # for each pattern vertex, the earlier-placed neighbors it must attach to
    back = [[pos[u] for u in bits(pattern.adj[v]) if pos[u] < pos[v]] for v in order]
    need = [pattern.degree(v) for v in order]
    host_deg = host.degrees()
    all_host = (1 << host.n) - 1
    eligible = [
        sum(1 << x for x in range(host.n) if host_deg[x] >= need[i]) for i in range(len(order))
    ]
    image = [0] * len(order)
    total = 0

    def place(i: int, used: int) -> bool:
        nonlocal total
        if i == len(order):
            total += 1
            return stop_at_first
        cand = eligible[i] & ~used & all_host
        for p in back[i]:
            cand &= host.adj[image[p]]
        for x in bits(cand):
            image[i] = x
            if place(i + 1, used | (1 << x)):
                return True
        return False

    place(0, 0)
    return total


@lru_cache(maxsize=256)
def automorphism_count(g: Graph) -> int:
    """|Aut(g)| by backtracking over vertex permutations of ``g``."""
    n = g.n
    deg = g.degrees()
    image = [-1] * n
    count = 0

    def extend(v: int, used: int) -> None:
        nonlocal count
        if v == n:
            count += 1
            return
        for x in range(n):
            if used >> x & 1 or deg[x] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if (g.adj[v] >> u & 1) != (g.adj[x] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = x
                extend(v + 1, used | (1 << x))
        image[v] = -1

    extend(0, 0)
    return count


def count_copies(pattern: Graph, host: Graph) -> int:
    """Number of (not necessarily induced) subgraphs of ``host`` isomorphic to ``pattern``."""
    if pattern.n > host.n:
        return 0
    return _embeddings(pattern, host, stop_at_first=False) // automorphism_count(pattern)


def is_subgraph_of(g: Graph, h: Graph) -> bool:
    """True iff ``h`` contains a subgraph isomorphic to ``g``."""
    if g.n > h.n or g.num_edges > h.num_edges:
        return False
    if not _degree_dominated(g, h):
        return False
    return _embeddings(g, h, stop_at_first=True) > 0


def _degree_dominated(g: Graph, h: Graph) -> bool:
    # the i-th largest degree of g can never exceed the i-th largest of h
    gd = sorted(g.degrees(), reverse=True)
    hd = sorted(h.degrees(), reverse=True)
    return all(a <= b for a, b in zip(gd, hd))


# canonical forms ----------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-order isomorphism key: vertex count plus the minimal
    column-major upper-triangle bit string over canonical labelings."""

    n: int
    code: int


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    # Split cells by neighbor counts into splitter cells until equitable.
    # Sub-cells are ordered by count, so the result is label-invariant.
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            splitter = cells[s]
            for c in range(len(cells)):
                cell = cells[c]
                if cell & (cell - 1) == 0:
                    continue
                groups: dict[int, int] = {}
                for v in bits(cell):
                    k = (adj[v] & splitter).bit_count()
                    groups[k] = groups.get(k, 0) | (1 << v)
                if len(groups) > 1:
                    cells[c : c + 1] = [groups[k] for k in sorted(groups)]
                    changed = True
                    break
            if changed:
                break
    return cells


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _canonical_search(g: Graph) -> tuple[int, list[int]]:
    adj = g.adj
    n = g.n
    if n == 0:
        return 0, []
    best: list = [None, None]

    def descend(cells: list[int]) -> None:
        cells = _refine(adj, cells)
        target = next((c for c, cell in enumerate(cells) if cell & (cell - 1)), None)
        if target is None:
            order = [cell.bit_length() - 1 for cell in cells]
            code = _leaf_code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        # Swapping two twins is an automorphism fixing every individualized
        # vertex, so only one twin per class needs a branch.
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for v in bits(cell):
            open_key = adj[v]
            closed_key = adj[v] | (1 << v)
            if open_key in seen_open or closed_key in seen_closed:
                continue
            seen_open.add(open_key)
            seen_closed.add(closed_key)
            branch = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :]
            descend(branch)

    descend([(1 << n) - 1])
    return best[0], best[1]


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> CanonicalForm:
    code, _ = _canonical_search(g)
    return CanonicalForm(g.n, code)


def canonicalize(g: Graph) -> tuple[CanonicalForm, Graph]:
    """Canonical key together with the canonically relabeled graph."""
    code, order = _canonical_search(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return CanonicalForm(g.n, code), g.relabel(perm)


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` with ``g.relabel(perm)`` equal to the canonical graph."""
    _, order = _canonical_search(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return perm


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# serialization ------------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 input; ``position`` is the offending byte offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"graph6 error at byte {position}: {message}")
        self.position = position


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 short form supports at most 62 vertices")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty input", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable range 63..126", pos)
    n = ord(s[0]) - 63
    if n > 62:
        raise Graph6Error("long-form vertex counts (n > 62) are not supported", 0)
    total = n * (n - 1) // 2
    expected = 1 + (total + 5) // 6
    if len(s) != expected:
        raise Graph6Error(f"expected {expected} bytes for n={n}, got {len(s)}", min(len(s), expected))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if total % 6:
        pad = ord(s[-1]) - 63
        if pad & ((1 << (6 - total % 6)) - 1):
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph(n, tuple(rows))


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def from_json(text: str) -> Graph:
    data = json.loads(text)
    try:
        return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"edge-list JSON needs keys 'n' and 'edges': {exc}") from exc
