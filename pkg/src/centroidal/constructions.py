"""Explicit graphs with known centroidal bases, and recognition of the graphs with CD = n - 1."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import graph as gc
from .bounds import lower_bound_paths
from .graph import Graph, GraphError, all_pairs_distances
from .locate import is_centroidal_locating


class ConstructionError(GraphError):
    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message if witness is None else f"{message} (unidentified pair {witness})")
        self.witness = witness


@dataclass(frozen=True)
class ConstructedInstance:
    graph: Graph
    basis: tuple[int, ...]
    claimed_cd: int | tuple[int, int]
    provenance: str
    verified: bool = True
    minimized: tuple[int, ...] | None = None


def _checked(g: Graph, basis, claimed, provenance: str, *, minimize: bool = False) -> ConstructedInstance:
    dm = all_pairs_distances(g)
    basis = tuple(sorted(basis))
    check = is_centroidal_locating(dm, basis)
    if not check:
        raise ConstructionError(f"{provenance}: basis is not centroidal locating", check.witness)
    smaller = greedy_minimize(dm, basis) if minimize else None
    return ConstructedInstance(g, basis, claimed, provenance, True, smaller)


def greedy_minimize(dm, basis) -> tuple[int, ...]:
    """Drop basis vertices (highest id first) while the rest still locates."""
    kept = set(basis)
    for v in sorted(basis, reverse=True):
        if len(kept) > 1 and is_centroidal_locating(dm, kept - {v}):
            kept.discard(v)
    return tuple(sorted(kept))


# --- bounded diameter -------------------------------------------------------

def construct_diam2(k: int) -> ConstructedInstance:
    """Diameter-2 graph on 2^k + k - 1 vertices whose first k vertices are a centroidal basis.

    The basis induces a k-cycle; the other 2^k - 1 vertices form a clique and
    vertex k + s - 1 sees exactly the basis vertices in the bitmask s.
    """
    if k < 4:
        raise GraphError("diameter-2 construction needs k >= 4")
    edges = [(i, (i + 1) % k) for i in range(k)]
    S = list(range(k, k + 2**k - 1))
    edges += combinations(S, 2)
    for mask, s in enumerate(S, start=1):
        edges += [(b, s) for b in range(k) if mask >> b & 1]
    g = Graph.from_edges(k + len(S), edges)
    return _checked(g, range(k), k, f"diam2(k={k})")


def construct_diam3(k: int) -> ConstructedInstance:
    """Diameter-3 graph on 3^k - 2^(k+1) + 2 vertices with an independent centroidal basis B of size k.

    Layers: B; a clique X of x(S) for 2 <= |S| <= k-2; an independent Y of
    y(S, T) for 1 <= |S| <= k-2 and T a proper non-empty subset of B - S;
    a clique Z of z(S) for |S| >= k-1. Every vertex named by S sees S. A
    y(S, T) also sees x(T), or x({t, min S}) when T = {t}.
    """
    if k < 4:
        raise GraphError("diameter-3 construction needs k >= 4")
    B = list(range(k))
    next_id = k
    edges: list[tuple[int, int]] = []

    def subsets(sizes):
        for r in sizes:
            yield from (frozenset(c) for c in combinations(B, r))

    x_of: dict[frozenset[int], int] = {}
    for S in subsets(range(2, k - 1)):
        x_of[S] = next_id
        edges += [(b, next_id) for b in S]
        next_id += 1
    edges += combinations(x_of.values(), 2)

    for S in subsets(range(1, k - 1)):
        rest = [b for b in B if b not in S]
        for r in range(1, len(rest)):
            for T in map(frozenset, combinations(rest, r)):
                y = next_id
                next_id += 1
                edges += [(b, y) for b in S]
                target = T if len(T) >= 2 else T | {min(S)}
                edges.append((x_of[target], y))

    z_ids = []
    for S in subsets(range(k - 1, k + 1)):
        edges += [(b, next_id) for b in S]
        z_ids.append(next_id)
        next_id += 1
    edges += combinations(z_ids, 2)

    g = Graph.from_edges(next_id, edges)
    return _checked(g, B, k, f"diam3(k={k})")


# --- paths and cycles -------------------------------------------------------

def _cycle_size(p: int, q: int) -> int:
    # with only two blocks the last B0 vertex is needed
    return p + q - 1 if p >= 3 else p + q


def cycle_decompositions(n: int) -> list[tuple[int, int]]:
    """All (p, q), p, q >= 2, with n = p(2q + 2)."""
    return [(p, r // 2 - 1) for p in range(2, n // 6 + 1) if n % p == 0 and (r := n // p) % 2 == 0 and r // 2 - 1 >= 2]


def path_decompositions(n: int) -> list[tuple[int, int]]:
    """All (p, q), p, q >= 2, with n = p(2q + 2) + 1."""
    return cycle_decompositions(n - 1)


def _strict_lb(m: int, k_paths: int) -> int:
    return lower_bound_paths(m, k_paths).integer


def construct_cycle_basis(n: int) -> ConstructedInstance:
    """Centroidal locating set of C_n built from blocks of 2q + 2 consecutive vertices.

    B1 holds the first vertex of each block and B0 every second vertex at the
    start of block 0. Without an exact block decomposition the leftover tail
    joins B0 along with the whole first block.
    """
    if n < 12:
        raise GraphError("cycle construction needs n >= 12")
    g = gc.cycle(n)
    lb = _strict_lb(n, 4 if n % 2 == 0 else 3)
    options = cycle_decompositions(n)
    if options:
        p, q = min(options, key=lambda pq: (_cycle_size(*pq), -pq[0]))
        B1 = {i * (2 * q + 2) for i in range(p)}
        last = q if p >= 3 else q + 1
        B0 = {2 * j for j in range(1, last)}
        basis = B0 | B1
        provenance = f"cycle-basis(n={n}, p={p}, q={q})"
    else:
        ell = math.isqrt(n // 2)
        m = 2 * ell * ell
        p, q = ell, ell - 1
        B1 = {i * (2 * q + 2) for i in range(p)}
        B0 = set(range(1, 2 * q + 2)) | set(range(m, n))
        basis = B0 | B1
        provenance = f"cycle-basis(n={n}, padded from {m})"
    return _checked(g, basis, (lb, len(basis)), provenance, minimize=True)


def construct_path_basis(n: int) -> ConstructedInstance:
    """Centroidal locating set of P_n: block starts plus short alternating runs at both ends."""
    if n < 13:
        raise GraphError("path construction needs n >= 13")
    g = gc.path(n)
    lb = _strict_lb(n - 1, 2)
    options = path_decompositions(n)
    if options:
        p, q = min(options, key=lambda pq: (pq[0] + 2 * pq[1], -pq[0]))
        B1 = {i * (2 * q + 2) for i in range(p + 1)}
        B0 = {2 * j for j in range(1, q)}
        basis = B1 | B0 | {n - 1 - b for b in B0}
        provenance = f"path-basis(n={n}, p={p}, q={q})"
    else:
        ell = math.isqrt((n - 1) // 4)
        m = 4 * ell * ell + 1
        p, q = 2 * ell, ell - 1
        B1 = {i * (2 * q + 2) for i in range(p + 1)}
        B0 = set(range(1, 2 * q + 2))
        B0_right = set(range(max(0, m - 2 * q - 3), n)) - {m - 1}
        basis = B1 | B0 | B0_right
        provenance = f"path-basis(n={n}, padded from {m})"
    return _checked(g, basis, (lb, len(basis)), provenance, minimize=True)


# --- graphs with CD = n - 1 -------------------------------------------------

EXTREMAL_FAMILIES = ("K_n", "K_1,n-1", "K_2,n-2", "S_n", "T_n", "U_n")


def extremal_family(name: str, n: int) -> ConstructedInstance:
    if name not in EXTREMAL_FAMILIES:
        raise GraphError(f"unknown extremal family {name!r}; choose from {EXTREMAL_FAMILIES}")
    if n < 3 or (name in ("S_n", "T_n", "U_n") and n < 4):
        raise GraphError(f"{name} needs more vertices (got n={n})")
    if name == "K_n":
        g, basis = gc.complete(n), range(n - 1)
    elif name == "K_1,n-1":
        g, basis = gc.star(n), range(1, n)
    elif name == "K_2,n-2":
        # for n = 3 the single vertex on the far side is the centre of a P3
        g, basis = gc.complete_bipartite(2, n - 2), ([0, 1] if n == 3 else [0, *range(2, n)])
    elif name == "S_n":
        g, basis = gc.s_graph(n), [0, *range(2, n)]
    elif name == "T_n":
        g, basis = gc.t_graph(n), [0, 1, *range(3, n)]
    else:
        g, basis = gc.u_graph(n), [0, 1, *range(3, n)]
    return _checked(g, basis, n - 1, f"{name}(n={n})")


def _pair_joined_to_rest(g: Graph, adjacent: bool) -> bool:
    """Two vertices (adjacent or not) seeing every other vertex, the others pairwise independent of each other."""
    n = g.n
    for u, v in combinations(range(n), 2):
        if g.has_edge(u, v) != adjacent:
            continue
        rest = set(range(n)) - {u, v}
        if all(g.neighbors(w) == {u, v} for w in rest):
            return True
    return False


def recognize_extremal(g: Graph) -> str | None:
    """Name of the extremal family ``g`` belongs to, or None."""
    n = g.n
    if n < 3 or not g.is_connected():
        return None
    deg = g.degrees()
    if g.m == n * (n - 1) // 2:
        return "K_n"
    if g.m == n - 1 and max(deg) == n - 1:
        return "K_1,n-1"
    if g.m == 2 * (n - 2) and _pair_joined_to_rest(g, adjacent=False):
        return "K_2,n-2"
    if n < 4:
        return None
    if g.m == 2 * (n - 2) + 1 and _pair_joined_to_rest(g, adjacent=True):
        return "S_n"
    internal = [u for u in range(n) if deg[u] > 1]
    if g.is_tree() and len(internal) == 2 and min(deg[u] for u in internal) == 2:
        return "T_n"
    if g.m == n:
        twos = [u for u in range(n) if deg[u] == 2]
        hub = [u for u in range(n) if deg[u] == n - 1]
        if len(twos) == 2 and len(hub) == 1 and g.has_edge(*twos) and deg.count(1) == n - 3:
            return "U_n"
    return None


# --- small Bell-optimal fixtures --------------------------------------------

def _fig2b() -> Graph:
    # hexagon 0..5, centre 6 on 1, 3, 5, and three 2-paths 1-7-8-3, 3-9-10-5, 5-11-12-1
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    spokes = [(6, 1), (6, 3), (6, 5)]
    outer = [(1, 7), (7, 8), (8, 3), (3, 9), (9, 10), (10, 5), (5, 11), (11, 12), (12, 1)]
    return Graph.from_edges(13, hexagon + spokes + outer)


def fig2_fixtures() -> list[ConstructedInstance]:
    """The two 13-vertex graphs with a centroidal basis of size 3.

    A fixture whose basis fails verification is returned with ``verified=False``
    instead of raising, so a transcription problem is visible rather than patched.
    """
    out = []
    for name, g, basis in (("fig2a", gc.fig2a(), (1, 5, 9)), ("fig2b", _fig2b(), (1, 3, 5))):
        ok = bool(is_centroidal_locating(all_pairs_distances(g), basis))
        out.append(ConstructedInstance(g, basis, 3, name, verified=ok))
    return out


CONSTRUCTIONS = {
    "diam2": construct_diam2,
    "diam3": construct_diam3,
    "cycle-basis": construct_cycle_basis,
    "path-basis": construct_path_basis,
}
