"""Simple undirected graphs stored as per-vertex neighbor bitsets.

Vertices are ``0..n-1``.  A vertex set is an ``int`` whose bit ``v`` is set
when ``v`` belongs to the set, so the same type serves as an adjacency row and
as a candidate dominating set.

Family layouts are part of the public contract:

* path / cycle: vertices in traversal order.
* star(n): the hub is vertex 0, leaves are ``1..n``.
* join(G1, G2): G1's vertices first, then G2's shifted by ``|V(G1)|``.
* corona(G, H): G occupies ``0..n-1``; the copy of H attached to spine vertex
  ``i`` occupies ``n + i*m .. n + (i+1)*m - 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class GraphError(ValueError):
    """A graph or family description violates a structural constraint."""


class EdgeListError(GraphError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def bits(s: int) -> Iterator[int]:
    """Yield the members of bitset ``s`` in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError(
                f"adjacency has {len(self.adjacency)} rows for {self.n} vertices"
            )
        self.validate()

    def validate(self) -> None:
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adjacency):
            if row & ~full or row < 0:
                raise GraphError(f"vertex {u} has a neighbor outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in bits(row):
                if not self.adjacency[v] >> u & 1:
                    raise GraphError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for {n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adjacency[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adjacency]

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= self.adjacency[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.full


def closed_neighborhood(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for a graph on {g.n} vertices")
    return g.adjacency[v] | (1 << v)


# -- family constructors ------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path requires n >= 1, got {n}")
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle requires n >= 3, got {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph requires n >= 1, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def star(n: int) -> Graph:
    """K_{1,n}: hub 0 joined to leaves 1..n."""
    if n < 1:
        raise GraphError(f"star requires n >= 1 leaves, got {n}")
    return Graph.from_edges(n + 1, ((0, v) for v in range(1, n + 1)))


def join(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    edges = g1.edges()
    edges += [(u + n1, v + n1) for u, v in g2.edges()]
    edges += [(u, n1 + v) for u in range(n1) for v in range(g2.n)]
    return Graph.from_edges(n1 + g2.n, edges)


def corona(g: Graph, h: Graph) -> Graph:
    n, m = g.n, h.n
    edges = g.edges()
    h_edges = h.edges()
    for i in range(n):
        base = n + i * m
        edges += [(base + u, base + v) for u, v in h_edges]
        edges += [(i, base + u) for u in range(m)]
    return Graph.from_edges(n * (1 + m), edges)


# -- symbolic family descriptions --------------------------------------------

KINDS = ("path", "cycle", "complete", "star", "join", "corona", "corona-k1", "explicit")
_SIMPLE = ("path", "cycle", "complete", "star")


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic name for a graph.

    ``path:5``, ``cycle:4``, ``complete:3``, ``star:4`` name the basic
    families; ``join(A,B)``, ``corona(A,B)`` and ``corona-k1(A)`` combine
    nested specs; ``explicit:N:u-v;u-v`` carries an edge list.
    """

    kind: str
    n: int | None = None
    children: tuple[FamilySpec, ...] = ()
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        if self.kind in _SIMPLE:
            if self.n is None:
                raise GraphError(f"{self.kind} requires a size parameter")
            low = 3 if self.kind == "cycle" else 1
            if self.n < low:
                raise GraphError(f"{self.kind} requires n >= {low}, got {self.n}")
        elif self.kind in ("join", "corona"):
            if len(self.children) != 2:
                raise GraphError(f"{self.kind} requires two child specs")
        elif self.kind == "corona-k1":
            if len(self.children) != 1:
                raise GraphError("corona-k1 requires one base spec")
        elif self.kind == "explicit":
            if self.n is None or self.n < 1:
                raise GraphError("explicit graph requires a vertex count >= 1")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        spec, rest = _parse_spec(text.replace(" ", ""), 0)
        if rest != len(text.replace(" ", "")):
            raise GraphError(f"trailing characters in family spec {text!r}")
        return spec

    def __str__(self) -> str:
        if self.kind in _SIMPLE:
            return f"{self.kind}:{self.n}"
        if self.kind == "explicit":
            body = ";".join(f"{u}-{v}" for u, v in self.edges)
            return f"explicit:{self.n}:{body}" if body else f"explicit:{self.n}"
        return f"{self.kind}({','.join(str(c) for c in self.children)})"

    def order(self) -> int:
        """Vertex count of the built graph, without building it."""
        if self.kind == "star":
            return self.n + 1
        if self.kind in ("path", "cycle", "complete", "explicit"):
            return self.n
        if self.kind == "join":
            return self.children[0].order() + self.children[1].order()
        if self.kind == "corona":
            return self.children[0].order() * (1 + self.children[1].order())
        return 2 * self.children[0].order()


_TOKEN = re.compile(r"[a-z][a-z0-9-]*")


def _parse_spec(s: str, pos: int) -> tuple[FamilySpec, int]:
    m = _TOKEN.match(s, pos)
    if not m:
        raise GraphError(f"expected a family name at position {pos} in {s!r}")
    kind, pos = m.group(), m.end()
    if kind in ("join", "corona", "corona-k1"):
        if pos >= len(s) or s[pos] != "(":
            raise GraphError(f"{kind} expects '(' in {s!r}")
        children = []
        pos += 1
        while True:
            child, pos = _parse_spec(s, pos)
            children.append(child)
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == ")":
                return FamilySpec(kind, children=tuple(children)), pos + 1
            raise GraphError(f"unterminated {kind}(...) in {s!r}")
    if pos >= len(s) or s[pos] != ":":
        raise GraphError(f"{kind} expects ':<n>' in {s!r}")
    m = re.compile(r"\d+").match(s, pos + 1)
    if not m:
        raise GraphError(f"expected a non-negative integer after '{kind}:' in {s!r}")
    n, pos = int(m.group()), m.end()
    if kind != "explicit":
        return FamilySpec(kind, n), pos
    edges = []
    if pos < len(s) and s[pos] == ":":
        m = re.compile(r"(\d+-\d+)(;\d+-\d+)*").match(s, pos + 1)
        if not m:
            raise GraphError(f"bad explicit edge list in {s!r}")
        edges = [tuple(map(int, e.split("-"))) for e in m.group().split(";")]
        pos = m.end()
    return FamilySpec("explicit", n, edges=tuple(sorted(edges))), pos


def build(spec: FamilySpec) -> Graph:
    if spec.kind == "path":
        return path(spec.n)
    if spec.kind == "cycle":
        return cycle(spec.n)
    if spec.kind == "complete":
        return complete(spec.n)
    if spec.kind == "star":
        return star(spec.n)
    if spec.kind == "join":
        return join(build(spec.children[0]), build(spec.children[1]))
    if spec.kind == "corona":
        return corona(build(spec.children[0]), build(spec.children[1]))
    if spec.kind == "corona-k1":
        return corona(build(spec.children[0]), complete(1))
    return Graph.from_edges(spec.n, spec.edges)


def explicit_spec(g: Graph) -> FamilySpec:
    return FamilySpec("explicit", g.n, edges=tuple(g.edges()))


def from_edge_list(text: bytes | str) -> Graph:
    """Parse the whitespace-separated ``u v`` edge-list format.

    ``#`` lines and blank lines are skipped.  An optional first data line
    ``n <count>`` fixes the vertex count; otherwise it is one more than the
    largest id seen.  Duplicate edges collapse.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    declared = None
    edges: set[tuple[int, int]] = set()
    max_id = -1
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not seen_data and parts[0] == "n":
            seen_data = True
            if len(parts) != 2:
                raise EdgeListError("header must be 'n <count>'", lineno)
            try:
                declared = int(parts[1])
            except ValueError:
                raise EdgeListError(f"non-integer vertex count {parts[1]!r}", lineno) from None
            if declared < 0:
                raise EdgeListError("vertex count must be non-negative", lineno)
            continue
        seen_data = True
        if len(parts) != 2:
            raise EdgeListError(f"expected two vertex ids, got {len(parts)} tokens", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer token in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListError("vertex ids must be non-negative", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
        max_id = max(max_id, u, v)
    n = max_id + 1 if declared is None else declared
    if max_id >= n:
        raise EdgeListError(f"vertex id {max_id} exceeds declared count {n}")
    return Graph.from_edges(n, sorted(edges))
