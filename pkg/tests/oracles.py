"""Slow, independent reference implementations used to cross-check the library.

Nothing here imports the solver internals: distances come from Floyd-Warshall,
rank vectors from plain sorting, and minimum sets from trying every subset.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

INF = math.inf


def floyd_warshall(n: int, edges) -> list[list[float]]:
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def rank_partition(d, x: int, B) -> tuple[frozenset, ...]:
    levels = sorted({d[x][b] for b in B})
    return tuple(frozenset(b for b in B if d[x][b] == lvl) for lvl in levels)


def locates(d, B) -> bool:
    seen = [rank_partition(d, x, B) for x in range(len(d))]
    return len(set(seen)) == len(seen)


def resolves(d, L) -> bool:
    vecs = [tuple(d[x][w] for w in L) for x in range(len(d))]
    return len(set(vecs)) == len(vecs)


def ld_valid(n: int, edges, D) -> bool:
    nbr = [set() for _ in range(n)]
    for u, v in edges:
        nbr[u].add(v)
        nbr[v].add(u)
    traces = []
    for v in range(n):
        if v in D:
            continue
        t = frozenset(nbr[v] & set(D))
        if not t:
            return False
        traces.append(t)
    return len(set(traces)) == len(traces)


def _smallest(n: int, ok, start: int = 0):
    for k in range(start, n + 1):
        for S in combinations(range(n), k):
            if ok(S):
                return k, S
    raise AssertionError("no valid set")


def brute_cd(n: int, edges):
    d = floyd_warshall(n, edges)
    return _smallest(n, lambda S: locates(d, S), start=1)


def brute_md(n: int, edges):
    d = floyd_warshall(n, edges)
    return _smallest(n, lambda S: resolves(d, S))


def brute_ld(n: int, edges):
    return _smallest(n, lambda S: ld_valid(n, edges, set(S)))


def all_cd_sets(n: int, edges, k: int) -> list[tuple[int, ...]]:
    d = floyd_warshall(n, edges)
    return [S for S in combinations(range(n), k) if locates(d, S)]


def bell_series(k: int, terms: int = 400) -> int:
    """Ordered Bell number from the series sum_{j>=0} j^k / 2^(j+1), truncated and rounded."""
    total = sum(Fraction(j**k, 2 ** (j + 1)) for j in range(terms))
    return round(total)


def bell_stirling(k: int) -> int:
    """Ordered Bell number as sum_j j! S(k, j) with Stirling numbers of the second kind."""
    S = [[0] * (k + 1) for _ in range(k + 1)]
    S[0][0] = 1
    for i in range(1, k + 1):
        for j in range(1, i + 1):
            S[i][j] = j * S[i - 1][j] + S[i - 1][j - 1]
    return sum(math.factorial(j) * S[k][j] for j in range(k + 1))


def separates(d, a: int, b: int, x: int, y: int) -> bool:
    """Case analysis straight from the definition: some ordering of {a, b} has
    a strictly closer to x than b while not strictly closer to y, or a tie at
    one vertex and none at the other."""
    dxa, dxb, dya, dyb = d[x][a], d[x][b], d[y][a], d[y][b]
    for p, q, r, s in ((dxa, dxb, dya, dyb), (dxb, dxa, dyb, dya)):
        if p < q and not r < s:
            return True
        if r < s and not p < q:
            return True
    return False


def min_cover(universe, sets) -> int:
    universe = set(universe)
    sets = [set(s) for s in sets]
    for r in range(len(sets) + 1):
        for combo in combinations(sets, r):
            if set().union(*combo) >= universe:
                return r
    raise AssertionError("uncoverable")
