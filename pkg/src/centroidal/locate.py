"""Rank vectors, pair identification, centroidal-locating verification and facility scores."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import DistanceMatrix, Graph, GraphError


@dataclass(frozen=True)
class RankVector:
    """Detectors grouped by distance to a probe vertex, nearest class first."""

    classes: tuple[frozenset[int], ...]

    def __str__(self) -> str:
        parts = []
        for cls in self.classes:
            ids = sorted(cls)
            parts.append(str(ids[0]) if len(ids) == 1 else "{" + ",".join(map(str, ids)) + "}")
        return "<".join(parts)

    def __len__(self) -> int:
        return len(self.classes)


def _detectors(B: Iterable[int]) -> list[int]:
    detectors = sorted(set(B))
    if not detectors:
        raise ValueError("detector set must be non-empty")
    return detectors


def rank_vector(dm: DistanceMatrix, x: int, B: Iterable[int]) -> RankVector:
    dm.require_connected()
    by_distance: dict[int, set[int]] = {}
    for b in _detectors(B):
        by_distance.setdefault(dm[x, b], set()).add(b)
    return RankVector(tuple(frozenset(by_distance[k]) for k in sorted(by_distance)))


def sign_profile(dm: DistanceMatrix, a: int, b: int, x: int) -> int:
    """sign(d(x, a) - d(x, b)) in {-1, 0, 1}."""
    diff = dm[x, a] - dm[x, b]
    return (diff > 0) - (diff < 0)


def identifies(dm: DistanceMatrix, pair: tuple[int, int], x: int, y: int) -> bool:
    """Whether detectors ``pair`` tell ``x`` and ``y`` apart by relative distance.

    Comparing the three-valued signs covers both orderings of the pair: a tie
    on one side and a strict inequality on the other is a separation, as is
    a strict inequality that flips direction.
    """
    a, b = pair
    if a == b:
        raise ValueError("detector pair must have two distinct vertices")
    if x == y:
        raise ValueError("probe vertices must be distinct")
    return sign_profile(dm, a, b, x) != sign_profile(dm, a, b, y)


def competition_ranks(dist: np.ndarray) -> np.ndarray:
    """For distances of shape (..., k) return, per entry, how many entries are strictly smaller.

    Two probes share a rank vector exactly when their rank arrays agree.
    """
    return (dist[..., None, :] < dist[..., :, None]).sum(axis=-1)


def rank_signatures(dm: DistanceMatrix, B: Iterable[int]) -> np.ndarray:
    """Matrix of shape (n, |B|): the competition-rank encoding of every rank vector."""
    dm.require_connected()
    return competition_ranks(dm.d[:, _detectors(B)])


def first_collision(rows: np.ndarray) -> tuple[int, int] | None:
    """Lexicographically smallest pair (x, y), x < y, of equal rows, or None."""
    groups: dict[bytes, list[int]] = {}
    for i, row in enumerate(np.ascontiguousarray(rows)):
        groups.setdefault(row.tobytes(), []).append(i)
    clashes = [(g[0], g[1]) for g in groups.values() if len(g) > 1]
    return min(clashes) if clashes else None


@dataclass(frozen=True)
class Verification:
    ok: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_centroidal_locating(dm: DistanceMatrix, B: Iterable[int]) -> Verification:
    """Check that all rank vectors are pairwise distinct; on failure report the smallest clash."""
    witness = first_collision(rank_signatures(dm, B))
    return Verification(witness is None, witness)


def is_centroidal_locating_pairwise(dm: DistanceMatrix, B: Iterable[int]) -> Verification:
    """Same question answered through the pair-identification predicate (slow reference)."""
    detectors = _detectors(B)
    pairs = list(combinations(detectors, 2))
    for x, y in combinations(range(dm.n), 2):
        if not any(identifies(dm, p, x, y) for p in pairs):
            return Verification(False, (x, y))
    return Verification(True)


def is_resolving(dm: DistanceMatrix, L: Iterable[int]) -> Verification:
    """Metric-dimension check: distance vectors to ``L`` are pairwise distinct."""
    dm.require_connected()
    cols = sorted(set(L))
    witness = first_collision(dm.d[:, cols])
    return Verification(witness is None, witness)


def is_locating_dominating(g: Graph, D: Iterable[int]) -> Verification:
    """Every vertex outside ``D`` has a non-empty trace N(v) & D, and the traces are distinct.

    The witness is ``(v, v)`` for an undominated vertex, otherwise a clashing pair.
    """
    D = frozenset(D)
    seen: dict[frozenset[int], int] = {}
    for v in range(g.n):
        if v in D:
            continue
        trace = g.neighbors(v) & D
        if not trace:
            return Verification(False, (v, v))
        if trace in seen:
            return Verification(False, (seen[trace], v))
        seen[trace] = v
    return Verification(True)


def complement_certifies(g: Graph, S: Iterable[int]) -> bool:
    """True when every u in S keeps >= 2 neighbours outside S and those outside
    neighbourhoods are pairwise distinct; then V - S is centroidal locating."""
    S = frozenset(S)
    outside = [g.neighbors(u) - S for u in S]
    return all(len(o) >= 2 for o in outside) and len(set(outside)) == len(outside)


def v_region(dm: DistanceMatrix, u: int, v: int) -> frozenset[int]:
    """Vertices strictly closer to ``u`` than to ``v``."""
    if u == v:
        raise ValueError("u and v must differ")
    dm.require_connected()
    return frozenset(np.flatnonzero(dm.d[:, u] < dm.d[:, v]).tolist())


@dataclass(frozen=True)
class FacilityScores:
    f: tuple[int, ...]
    status: tuple[int, ...]
    median: frozenset[int]
    centroid: frozenset[int]


def facility_scores(dm: DistanceMatrix) -> FacilityScores:
    dm.require_connected()
    n = dm.n
    if n < 2:
        raise GraphError("facility scores need at least two vertices")
    d = dm.d
    # closer[u, v] = |{x : d(x,u) < d(x,v)}|
    closer = (d[:, :, None] < d[:, None, :]).sum(axis=0)
    pairwise = closer - closer.T
    np.fill_diagonal(pairwise, np.iinfo(np.int64).max)
    f = pairwise.min(axis=1)
    status = d.sum(axis=1)
    return FacilityScores(
        f=tuple(int(x) for x in f),
        status=tuple(int(x) for x in status),
        median=frozenset(np.flatnonzero(status == status.min()).tolist()),
        centroid=frozenset(np.flatnonzero(f == f.max()).tolist()),
    )


def branch_weight_centroid(g: Graph) -> frozenset[int]:
    """Vertices of a tree minimising the largest branch (edges of a component of T - u, plus the edge to u)."""
    if not g.is_tree():
        raise GraphError("branch-weight centroid is defined for trees only")
    weights = []
    for u in range(g.n):
        best = 0
        seen = {u}
        for start in g.neighbors(u):
            if start in seen:
                continue
            comp_edges = 0
            stack = [start]
            seen.add(start)
            while stack:
                w = stack.pop()
                for z in g.neighbors(w):
                    if z == u:
                        continue
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
                    if w < z:
                        comp_edges += 1
            best = max(best, comp_edges + 1)
        weights.append(best)
    low = min(weights)
    return frozenset(u for u, w in enumerate(weights) if w == low)
