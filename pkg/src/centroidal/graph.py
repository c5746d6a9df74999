"""Simple undirected graphs on vertices 0..n-1, edge-list I/O, generators, BFS distances."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

UNREACHABLE = -1


class GraphError(ValueError):
    """Raised for malformed graphs, bad generator parameters or disconnected input."""


class ParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Edges are stored as sorted pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adjacency[u]

    def closed_neighbors(self, u: int) -> frozenset[int]:
        return self.adjacency[u] | {u}

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Blank lines and ``#`` comments are ignored. An optional ``n <count>``
    line (before any edge) declares the vertex count so isolated vertices
    survive; otherwise ``n`` is one more than the largest id seen.
    """
    declared = None
    edges: set[tuple[int, int]] = set()
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges:
                raise ParseError(line_no, "'n <count>' header must come first and only once")
            if len(parts) != 2:
                raise ParseError(line_no, f"malformed header {line!r}")
            declared = _parse_int(parts[1], line_no)
            continue
        if len(parts) != 2:
            raise ParseError(line_no, f"expected 'u v', got {line!r}")
        u, v = _parse_int(parts[0], line_no), _parse_int(parts[1], line_no)
        if u == v:
            raise ParseError(line_no, f"self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
        max_id = max(max_id, u, v)
    n = max_id + 1 if declared is None else declared
    if max_id >= n:
        raise ParseError(0, f"vertex id {max_id} exceeds declared count {n}")
    return Graph(n, frozenset(edges))


def _parse_int(token: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(line_no, f"not an integer: {token!r}") from None
    if value < 0:
        raise ParseError(line_no, f"negative vertex id {value}")
    return value


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as f:
        return parse_edge_list(f.read())


def to_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances. Unreachable entries hold ``UNREACHABLE`` (-1)."""

    n: int
    d: np.ndarray
    connected: bool

    def __post_init__(self):
        self.d.setflags(write=False)

    def __getitem__(self, key) -> int:
        u, v = key
        return int(self.d[u, v])

    def require_connected(self) -> None:
        if not self.connected:
            raise GraphError("graph is disconnected; distances are not all finite")

    def eccentricity(self, u: int) -> int:
        self.require_connected()
        return int(self.d[u].max()) if self.n else 0

    def diameter(self) -> int:
        self.require_connected()
        return int(self.d.max()) if self.n else 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """One BFS per source."""
    d = np.full((g.n, g.n), UNREACHABLE, dtype=np.int64)
    adj = g.adjacency
    for s in range(g.n):
        row = d[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for w in adj[u]:
                if row[w] == UNREACHABLE:
                    row[w] = du
                    queue.append(w)
    connected = bool((d != UNREACHABLE).all())
    return DistanceMatrix(g.n, d, connected)


def diameter(dm: DistanceMatrix) -> int:
    return dm.diameter()


# --- generators -------------------------------------------------------------

def path(n: int) -> Graph:
    _at_least("path", n, 1)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _at_least("cycle", n, 3)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _at_least("complete", n, 1)
    return Graph.from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 is the centre."""
    _at_least("star", n, 2)
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    _at_least("complete_bipartite", a, 1)
    _at_least("complete_bipartite", b, 1)
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def s_graph(n: int) -> Graph:
    """K_2 (vertices 0, 1) joined to an independent set of n-2 vertices."""
    _at_least("S", n, 4)
    edges = [(0, 1)] + [(h, i) for i in range(2, n) for h in (0, 1)]
    return Graph.from_edges(n, edges)


def t_graph(n: int) -> Graph:
    """Path 0-1-2 with n-3 extra leaves hanging from vertex 2."""
    _at_least("T", n, 4)
    return Graph.from_edges(n, [(0, 1), (1, 2)] + [(2, i) for i in range(3, n)])


def u_graph(n: int) -> Graph:
    """Triangle 0,1,2 with n-3 leaves hanging from vertex 2."""
    _at_least("U", n, 4)
    return Graph.from_edges(n, [(0, 1), (1, 2), (0, 2)] + [(2, i) for i in range(3, n)])


def hypercube(k: int) -> Graph:
    _at_least("hypercube", k, 0)
    n = 1 << k
    return Graph.from_edges(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(k) if v < v ^ (1 << i)))


def fig2a() -> Graph:
    """12-cycle on 0..11 plus a centre 12 joined to 3, 7 and 11 (13 vertices)."""
    edges = [(i, (i + 1) % 12) for i in range(12)] + [(12, 3), (12, 7), (12, 11)]
    return Graph.from_edges(13, edges)


def _at_least(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise GraphError(f"{name} needs parameter >= {minimum}, got {value}")


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "S": (s_graph, 1),
    "T": (t_graph, 1),
    "U": (u_graph, 1),
    "hypercube": (hypercube, 1),
    "fig2a": (fig2a, 0),
}


def generate(family: str, params: Iterable[int] = ()) -> Graph:
    params = list(params)
    try:
        builder, arity = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)
