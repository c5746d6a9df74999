"""Set-cover approximation of the centroidal dimension and the locating-dominating lift."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable

import numpy as np

from .graph import DistanceMatrix, Graph, GraphError, all_pairs_distances
from .locate import is_centroidal_locating, is_locating_dominating


class UncoverableError(GraphError):
    def __init__(self, element):
        super().__init__(f"no hyperedge covers {element!r}")
        self.element = element


@dataclass
class SetCoverInstance:
    """Universe plus named hyperedges. Greedy ties go to the earliest-inserted hyperedge."""

    universe: tuple[Hashable, ...]
    hyperedges: dict[Hashable, frozenset] = field(default_factory=dict)

    def masks(self) -> dict[Hashable, int]:
        index = {e: i for i, e in enumerate(self.universe)}
        return {key: sum(1 << index[e] for e in members) for key, members in self.hyperedges.items()}


def colex_pairs(n: int) -> list[tuple[int, int]]:
    """All (a, b) with a < b, ordered by b then a."""
    return [(a, b) for b in range(n) for a in range(b)]


def build_cd_setcover(dm: DistanceMatrix) -> SetCoverInstance:
    """Universe: vertex pairs. Hyperedge for detector pair {a, b}: the vertex pairs it identifies."""
    dm.require_connected()
    n = dm.n
    if n < 2:
        raise GraphError("set-cover reduction needs at least two vertices")
    universe = tuple(combinations(range(n), 2))
    xs = np.array([p[0] for p in universe])
    ys = np.array([p[1] for p in universe])
    d = dm.d
    hyperedges = {}
    for a, b in colex_pairs(n):
        sign = np.sign(d[:, a] - d[:, b])
        hit = np.flatnonzero(sign[xs] != sign[ys])
        hyperedges[(a, b)] = frozenset(universe[i] for i in hit)
    return SetCoverInstance(universe, hyperedges)


@dataclass
class CoverResult:
    cover: list
    basis: tuple[int, ...] = ()
    greedy_trace: list[tuple[Hashable, int]] = field(default_factory=list)
    cover_basis: tuple[int, ...] = ()
    fallback_used: bool = False


def greedy_set_cover(inst: SetCoverInstance) -> CoverResult:
    """Repeatedly take the hyperedge covering the most uncovered elements."""
    masks = inst.masks()
    covered_any = 0
    for m in masks.values():
        covered_any |= m
    full = (1 << len(inst.universe)) - 1
    if covered_any != full:
        low = full & ~covered_any
        raise UncoverableError(inst.universe[(low & -low).bit_length() - 1])
    uncovered = full
    cover, trace = [], []
    keys = list(masks)
    while uncovered:
        best_key, best_gain = None, 0
        for key in keys:
            gain = (masks[key] & uncovered).bit_count()
            if gain > best_gain:
                best_key, best_gain = key, gain
        cover.append(best_key)
        trace.append((best_key, best_gain))
        uncovered &= ~masks[best_key]
    return CoverResult(cover=cover, greedy_trace=trace)


def _trivial_set(g: Graph) -> tuple[int, ...]:
    for u in range(g.n):
        if g.degree(u) >= 2:
            return tuple(v for v in range(g.n) if v != u)
    return tuple(range(g.n))


def approx_cd(g: Graph, dm: DistanceMatrix | None = None) -> CoverResult:
    """Greedy set cover over detector pairs; the basis is the union of chosen pairs,
    replaced by the trivial locating set when that is smaller."""
    dm = dm or all_pairs_distances(g)
    dm.require_connected()
    if g.n == 1:
        return CoverResult(cover=[], basis=(0,), cover_basis=(0,), fallback_used=True)
    result = greedy_set_cover(build_cd_setcover(dm))
    from_cover = tuple(sorted({v for pair in result.cover for v in pair}))
    result.cover_basis = from_cover
    trivial = _trivial_set(g)
    if len(trivial) < len(from_cover):
        result.basis, result.fallback_used = trivial, True
    else:
        result.basis = from_cover
    if len(from_cover) > 2 * len(result.cover):
        raise AssertionError("union of chosen pairs larger than twice the cover")
    check = is_centroidal_locating(dm, result.basis)
    if not check:
        raise AssertionError(f"approximate basis fails verification at {check.witness}")
    return result


def uniquely_dominated(g: Graph, D) -> list[int]:
    D = frozenset(D)
    return [v for v in range(g.n) if v not in D and len(g.neighbors(v) & D) == 1]


def ld_to_cd(g: Graph, D, dm: DistanceMatrix | None = None) -> tuple[int, ...]:
    """Turn a locating-dominating set into a centroidal locating set by adding
    every outside vertex that has exactly one neighbour in it."""
    D = frozenset(D)
    check = is_locating_dominating(g, D)
    if not check:
        raise GraphError(f"not a locating-dominating set (witness {check.witness})")
    return tuple(sorted(D | set(uniquely_dominated(g, D))))


def greedy_ld(g: Graph) -> tuple[int, ...]:
    """Greedy locating-dominating set via set cover.

    Elements are the vertices (to be dominated or chosen) and the vertex pairs
    (one of them chosen, or some chosen vertex adjacent to exactly one of them).
    """
    if not g.is_connected():
        raise GraphError("graph must be connected")
    n = g.n
    pairs = list(combinations(range(n), 2))
    universe = tuple([("v", v) for v in range(n)] + [("p", p) for p in pairs])
    hyperedges = {}
    for w in range(n):
        closed = g.closed_neighbors(w)
        members = {("v", v) for v in closed}
        members |= {("p", (x, y)) for x, y in pairs if w in (x, y) or ((x in closed) != (y in closed))}
        hyperedges[w] = frozenset(members)
    chosen = greedy_set_cover(SetCoverInstance(universe, hyperedges)).cover
    D = tuple(sorted(chosen))
    assert is_locating_dominating(g, D), "greedy cover must be locating-dominating"
    return D


def approx_cd_via_ld(g: Graph) -> tuple[int, ...]:
    """Greedy locating-dominating set lifted to a centroidal locating set (intended for diameter 2)."""
    return ld_to_cd(g, greedy_ld(g))
