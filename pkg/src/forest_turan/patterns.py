"""Target graphs J whose copies are counted."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, count_copies, count_stars, from_graph6, join, to_graph6


@dataclass(frozen=True)
class PatternGraph:
    kind: str
    params: tuple[int, ...] = ()
    g6: str = ""
    graph: Graph = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "graph", self._realize())

    def _realize(self) -> Graph:
        k, p = self.kind, self.params
        if k == "star":
            return Graph.star(p[0])
        if k == "clique":
            return Graph.complete(p[0])
        if k == "kstar":
            s, t = p
            return join(Graph.complete(s), Graph.empty(t))
        if k == "path":
            return Graph.path(p[0])
        if k == "arbitrary":
            return from_graph6(self.g6)
        raise ValueError(f"unknown pattern kind {k!r}")

    @classmethod
    def star(cls, r: int) -> PatternGraph:
        return cls("star", (r,))

    @classmethod
    def clique(cls, s: int) -> PatternGraph:
        return cls("clique", (s,))

    @classmethod
    def kstar(cls, s: int, t: int) -> PatternGraph:
        return cls("kstar", (s, t))

    @classmethod
    def path(cls, k: int) -> PatternGraph:
        return cls("path", (k,))

    @classmethod
    def arbitrary(cls, g: Graph) -> PatternGraph:
        return cls("arbitrary", (), to_graph6(g))

    @property
    def text(self) -> str:
        if self.kind == "arbitrary":
            return f"g6:{self.g6}"
        return f"{self.kind}:{','.join(map(str, self.params))}"

    def counter(self) -> Callable[[Graph], int]:
        """A function counting copies of this pattern, with a degree shortcut for stars."""
        if self.kind == "star":
            r = self.params[0]
            if r == 1:
                return lambda g: g.num_edges
            if r == 0:
                return lambda g: g.n
            return lambda g: count_stars(g, r)
        if self.kind == "clique" and self.params[0] == 2:
            return lambda g: g.num_edges
        pattern = self.graph
        return lambda g: count_copies(pattern, g)


def parse_pattern(text: str) -> PatternGraph:
    """Parse ``star:R``, ``clique:S``, ``kstar:S,T``, ``path:K`` or ``g6:<graph6>``."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise ValueError(f"pattern {text!r} must look like kind:args")
    kind = kind.strip().lower()
    if kind == "g6":
        return PatternGraph("arbitrary", (), arg.strip())
    try:
        params = tuple(int(a) for a in arg.split(","))
    except ValueError:
        raise ValueError(f"non-integer pattern parameter in {text!r}") from None
    arity = {"star": 1, "clique": 1, "kstar": 2, "path": 1}
    if kind not in arity:
        raise ValueError(f"unknown pattern kind {kind!r}")
    if len(params) != arity[kind]:
        raise ValueError(f"{kind} takes {arity[kind]} parameter(s), got {len(params)}")
    if any(x < 0 for x in params) or (kind in ("clique", "path") and params[0] < 1):
        raise ValueError(f"invalid parameters in {text!r}")
    return PatternGraph(kind, params)

