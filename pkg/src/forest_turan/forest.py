"""Linear forests ``P_{k1} ∪ ... ∪ P_{kt}`` and vertex-disjoint path packing."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, bits


class ForestSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class ForestSpec:
    """Path orders of a linear forest, sorted in descending order."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a linear forest needs at least one path")
        if any(k < 1 for k in self.parts):
            raise ValueError(f"path orders must be >= 1, got {self.parts}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        return sum(self.parts)

    @property
    def h(self) -> int:
        """Clique size of the extremal construction: sum of floor(k/2), minus one."""
        return sum(k // 2 for k in self.parts) - 1

    @property
    def eta(self) -> int:
        return int(all(k % 2 for k in self.parts))

    @property
    def is_tP3(self) -> bool:
        return all(k == 3 for k in self.parts)

    def tau(self, n: int) -> int:
        """0 when n - h is even, else 1."""
        return (n - self.h) % 2

    def require_path_orders(self) -> None:
        """Raise unless every path has order at least 2."""
        if any(k < 2 for k in self.parts):
            raise ValueError(f"every path order must be >= 2 here, got {self.text}")

    @property
    def text(self) -> str:
        return ",".join(map(str, self.parts))

    def __str__(self) -> str:
        return self.text


_SUGAR = re.compile(r"^(\d+)\s*[x*]\s*P\s*(\d+)$", re.IGNORECASE)


def parse_forest(text: str) -> ForestSpec:
    """Parse ``"k1,k2,...,kt"``; a token may also be ``"3xP3"`` for ``3,3,3``."""
    parts: list[int] = []
    tokens = [tok.strip() for tok in text.split(",")]
    for pos, tok in enumerate(tokens):
        if not tok:
            raise ForestSyntaxError(f"empty token at position {pos} in {text!r}")
        sugar = _SUGAR.match(tok)
        if sugar:
            count, k = int(sugar.group(1)), int(sugar.group(2))
            if count < 1:
                raise ForestSyntaxError(f"repeat count must be >= 1 in {tok!r}")
            parts.extend([k] * count)
            continue
        try:
            parts.append(int(tok))
        except ValueError:
            raise ForestSyntaxError(f"non-integer token {tok!r} at position {pos}") from None
    if any(k < 1 for k in parts):
        raise ForestSyntaxError(f"path orders must be >= 1 in {text!r}")
    return ForestSpec(tuple(parts))


def find_forest(g: Graph, forest: ForestSpec, transposition: bool = True) -> Optional[list[list[int]]]:
    """Return vertex-disjoint paths of the forest's orders in ``g``, or None.

    Parts are placed largest first.  At every choice point candidates that
    are twins in the still-unused part of the graph (and equally attached to
    the current path end) lead to isomorphic subproblems, so only one per
    twin class is tried.  With ``transposition`` enabled, failed states keyed
    by (part, remaining length, path end, used mask) are remembered; this also
    absorbs the symmetry between equal parts.
    """
    adj = g.adj
    path_parts = [k for k in forest.parts if k >= 2]
    singles = forest.t - len(path_parts)
    suffix = [0] * (len(path_parts) + 1)
    for i in range(len(path_parts) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + path_parts[i]
    full = (1 << g.n) - 1
    if g.n < forest.order:
        return None
    failed: set = set()
    paths: list[list[int]] = []
    current: list[int] = []

    def candidates(pool: int, avail: int) -> list[int]:
        out = []
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for v in bits(pool):
            open_key = adj[v] & avail
            closed_key = open_key | (1 << v)
            if open_key in seen_open or closed_key in seen_closed:
                continue
            seen_open.add(open_key)
            seen_closed.add(closed_key)
            out.append(v)
        return out

    def grow(part: int, left: int, used: int) -> bool:
        # ``left`` vertices of path_parts[part] still to place after ``current``
        avail = full & ~used
        if left == 0:
            paths.append(list(current))
            saved = list(current)
            current.clear()
            if start(part + 1, used):
                return True
            paths.pop()
            current.extend(saved)
            return False
        end = current[-1]
        key = (part, left, end, used)
        if transposition and key in failed:
            return False
        if avail.bit_count() < left + suffix[part + 1] + singles:
            return False
        for v in candidates(adj[end] & avail, avail):
            current.append(v)
            if grow(part, left - 1, used | (1 << v)):
                return True
            current.pop()
        if transposition:
            failed.add(key)
        return False

    def start(part: int, used: int) -> bool:
        avail = full & ~used
        if part == len(path_parts):
            return avail.bit_count() >= singles
        key = (part, used)
        if transposition and key in failed:
            return False
        if avail.bit_count() < suffix[part] + singles:
            return False
        for v in candidates(avail, avail):
            if not adj[v] & avail:
                continue
            current.append(v)
            if grow(part, path_parts[part] - 1, used | (1 << v)):
                return True
            current.pop()
        if transposition:
            failed.add(key)
        return False

    if not start(0, 0):
        return None
    used = 0
    for p in paths:
        for v in p:
            used |= 1 << v
    free = [v for v in range(g.n) if not used >> v & 1]
    return paths + [[v] for v in free[:singles]]


def contains_forest(g: Graph, forest: ForestSpec, transposition: bool = True) -> bool:
    return find_forest(g, forest, transposition) is not None


def is_forest_free(g: Graph, forest: ForestSpec, transposition: bool = True) -> bool:
    return find_forest(g, forest, transposition) is None
