"""Exact centroidal, metric and location-domination numbers by constrained subset search.

Candidates of each size are enumerated in lexicographic order and checked in
numpy batches, so the first success is the lexicographically smallest optimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Callable, Iterator

import numpy as np

from .bounds import bell_lower_bound
from .graph import DistanceMatrix, Graph, GraphError, all_pairs_distances
from .locate import competition_ranks

# cap on the number of elements in one batched comparison tensor
_BATCH_ELEMENTS = 30_000_000


@dataclass(frozen=True)
class ForcedConstraints:
    must_include: frozenset[int]
    at_least_one_of: tuple[frozenset[int], ...]


@dataclass
class SolveResult:
    value: int
    basis: tuple[int, ...]
    nodes_examined: int = 0
    certified: bool = True
    levels: dict[int, int] = field(default_factory=dict)


def twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs with equal open or equal closed neighbourhoods."""
    return [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if g.neighbors(u) == g.neighbors(v) or g.closed_neighbors(u) == g.closed_neighbors(v)
    ]


def forced_constraints(g: Graph) -> ForcedConstraints:
    """Vertices every centroidal locating set must contain, and sets it must meet.

    Leaves are forced. A leaf whose neighbour v has degree 2 forces v or v's
    other neighbour. Twins force at least one of the two.
    """
    if not g.is_connected():
        raise GraphError("graph must be connected")
    if g.n <= 2:
        # K1 and K2 need every vertex; the leaf rule below already says so for K2
        return ForcedConstraints(frozenset(range(g.n)), ())
    leaves = frozenset(u for u in range(g.n) if g.degree(u) == 1)
    groups: list[frozenset[int]] = []
    for u in sorted(leaves):
        (v,) = g.neighbors(u)
        if g.degree(v) == 2:
            groups.append(frozenset({v} | (g.neighbors(v) - {u})))
    groups.extend(frozenset(p) for p in twin_pairs(g))
    kept = []
    for s in groups:
        if s & leaves or s in kept:
            continue
        kept.append(s)
    return ForcedConstraints(leaves, tuple(kept))


def _require_connected(g: Graph, dm: DistanceMatrix | None) -> DistanceMatrix:
    if g.n < 1:
        raise GraphError("graph must have at least one vertex")
    dm = dm or all_pairs_distances(g)
    if not dm.connected:
        raise GraphError("graph must be connected")
    return dm


def _rows_distinct(codes: np.ndarray) -> np.ndarray:
    """codes: (batch, n) int64 -> bool (batch,) whether each row has pairwise distinct entries."""
    s = np.sort(codes, axis=1)
    return ~(s[:, 1:] == s[:, :-1]).any(axis=1)


def _batched_combinations(pool: list[int], r: int, size: int) -> Iterator[np.ndarray]:
    it = combinations(pool, r)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64).reshape(len(chunk), r)


class _Checker:
    """Vectorised validity test for a batch of candidate sets (rows of vertex ids)."""

    def __init__(self, n: int, ok_batch: Callable[[np.ndarray], np.ndarray], width: Callable[[int], int]):
        self.n = n
        self.ok_batch = ok_batch
        self.width = width

    def batch_size(self, k: int) -> int:
        return max(1, _BATCH_ELEMENTS // max(1, self.n * self.width(k)))


def _cd_checker(dm: DistanceMatrix) -> _Checker:
    d = dm.d
    n = dm.n

    def ok(sets: np.ndarray) -> np.ndarray:
        k = sets.shape[1]
        sub = d[:, sets].transpose(1, 0, 2)  # (batch, n, k)
        ranks = competition_ranks(sub)
        if k ** k < 2**62:
            codes = ranks @ (k ** np.arange(k, dtype=np.int64))
            return _rows_distinct(codes)
        return np.array([len(np.unique(r, axis=0)) == n for r in ranks])

    return _Checker(n, ok, lambda k: k * k)


def _md_checker(dm: DistanceMatrix) -> _Checker:
    d = dm.d
    n = dm.n
    base = int(d.max()) + 1

    def ok(sets: np.ndarray) -> np.ndarray:
        k = sets.shape[1]
        sub = d[:, sets].transpose(1, 0, 2)
        if base**k < 2**62:
            return _rows_distinct(sub @ (base ** np.arange(k, dtype=np.int64)))
        return np.array([len(np.unique(r, axis=0)) == n for r in sub])

    return _Checker(n, ok, lambda k: k)


def _ld_checker(g: Graph) -> _Checker:
    a = g.adjacency_matrix()
    n = g.n
    ids = np.arange(n, dtype=np.int64)

    def ok(sets: np.ndarray) -> np.ndarray:
        batch, k = sets.shape
        inside = np.zeros((batch, n), dtype=bool)
        np.put_along_axis(inside, sets, True, axis=1)
        if k < 62:
            traces = a[:, sets].transpose(1, 0, 2) @ (1 << np.arange(k, dtype=np.int64))
        else:  # pragma: no cover - only for huge sets
            raise GraphError("location-domination search limited to sets of size < 62")
        undominated = ((traces == 0) & ~inside).any(axis=1)
        # members get unique negative codes so only outside traces can clash
        codes = np.where(inside, -1 - ids, traces)
        return _rows_distinct(codes) & ~undominated

    return _Checker(n, ok, lambda k: k)


def _search(
    checker: _Checker,
    n: int,
    k_from: int,
    k_to: int,
    constraints: ForcedConstraints | None,
) -> SolveResult:
    forced = sorted(constraints.must_include) if constraints else []
    free = [v for v in range(n) if v not in set(forced)]
    groups = constraints.at_least_one_of if constraints else ()
    group_masks = np.zeros((len(groups), n), dtype=bool)
    for i, s in enumerate(groups):
        group_masks[i, sorted(s)] = True
    examined = 0
    levels: dict[int, int] = {}
    forced_arr = np.array(forced, dtype=np.int64)
    for k in range(max(k_from, len(forced)), k_to + 1):
        r = k - len(forced)
        if r > len(free):
            break
        level_count = 0
        for chunk in _batched_combinations(free, r, checker.batch_size(k)):
            if len(groups):
                member = np.zeros((len(chunk), n), dtype=bool)
                np.put_along_axis(member, chunk, True, axis=1)
                member[:, forced] = True
                keep = (member[:, None, :] & group_masks[None, :, :]).any(axis=2).all(axis=1)
                chunk = chunk[keep]
                if not len(chunk):
                    continue
            full = np.sort(np.concatenate([np.broadcast_to(forced_arr, (len(chunk), len(forced))), chunk], axis=1), axis=1)
            good = checker.ok_batch(full)
            hits = np.flatnonzero(good)
            if len(hits):
                level_count += int(hits[0]) + 1
                examined += level_count
                levels[k] = level_count
                return SolveResult(k, tuple(int(v) for v in full[hits[0]]), examined, True, levels)
            level_count += len(chunk)
        examined += level_count
        levels[k] = level_count
    return SolveResult(-1, (), examined, False, levels)


def _trivial_locating_set(g: Graph) -> tuple[int, ...]:
    """V minus a vertex of degree >= 2 when one exists, else V."""
    for u in range(g.n):
        if g.degree(u) >= 2:
            return tuple(v for v in range(g.n) if v != u)
    return tuple(range(g.n))


def exact_cd(
    g: Graph,
    size_cap: int | None = None,
    *,
    prune: bool = True,
    dm: DistanceMatrix | None = None,
    start: int | None = None,
) -> SolveResult:
    """Centroidal dimension and the lexicographically smallest centroidal basis.

    Sizes below the ordered-Bell bound are skipped. With ``prune`` the search
    only visits sets satisfying :func:`forced_constraints`. If ``size_cap`` is
    reached without success the trivial locating set is returned uncertified.
    """
    dm = _require_connected(g, dm)
    default_cap = g.n - 1 if g.max_degree() >= 2 else g.n
    cap = default_cap if size_cap is None else min(size_cap, default_cap)
    k_from = bell_lower_bound(g.n) if start is None else max(start, 1)
    constraints = forced_constraints(g) if prune else None
    result = _search(_cd_checker(dm), g.n, k_from, cap, constraints)
    if result.certified:
        return result
    fallback = _trivial_locating_set(g)
    # the search covered every size up to cap == default_cap would have succeeded
    return SolveResult(len(fallback), fallback, result.nodes_examined, False, result.levels)


def exact_md(g: Graph, *, dm: DistanceMatrix | None = None) -> SolveResult:
    """Metric dimension: fewest landmarks whose distance vectors separate all vertices."""
    dm = _require_connected(g, dm)
    if g.n == 1:
        return SolveResult(0, ())
    result = _search(_md_checker(dm), g.n, 1, g.n - 1, None)
    assert result.certified, "n - 1 landmarks always resolve a connected graph"
    return result


def exact_ld(g: Graph) -> SolveResult:
    """Location-domination number by exhaustive search."""
    _require_connected(g, None)
    result = _search(_ld_checker(g), g.n, 1, g.n, None)
    assert result.certified
    return result


def enumerate_centroidal_sets(g: Graph, k: int, dm: DistanceMatrix | None = None) -> list[tuple[int, ...]]:
    """Every centroidal locating set of size ``k`` (unpruned)."""
    dm = _require_connected(g, dm)
    checker = _cd_checker(dm)
    found = []
    for chunk in _batched_combinations(list(range(g.n)), k, checker.batch_size(k)):
        for row in chunk[checker.ok_batch(chunk)]:
            found.append(tuple(int(v) for v in row))
    return found
