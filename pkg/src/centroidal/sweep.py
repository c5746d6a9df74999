"""Exhaustive and sampled sweeps checking every inequality on many small graphs."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .approx import approx_cd, build_cd_setcover, ld_to_cd, uniquely_dominated
from .bounds import bounds_report
from .constructions import recognize_extremal
from .exact import exact_cd, exact_ld, exact_md
from .graph import Graph, all_pairs_distances
from .locate import is_centroidal_locating

MAX_EXHAUSTIVE_N = 7

CSV_COLUMNS = ("n", "m", "diameter", "md", "cd", "ld", "bell_lb", "path_lb", "family", "approx_cd", "ratio")

# connected graphs on n unlabeled vertices, n = 0..7
CONNECTED_COUNTS = (0, 1, 1, 2, 6, 21, 112, 853)


def connected_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs, in atlas order."""
    if max_n > MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_N}")
    from networkx.generators.atlas import graph_atlas_g

    for h in graph_atlas_g():
        n = h.number_of_nodes()
        if n < min_n or n > max_n:
            continue
        g = Graph.from_edges(n, h.edges())
        if n and g.is_connected():
            yield g


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p), resampled until connected."""
    while True:
        g = Graph.from_edges(n, (e for e in combinations(range(n), 2) if rng.random() < p))
        if g.is_connected():
            return g


def min_set_cover_size(masks: list[int], full: int, limit: int) -> int | None:
    """Smallest number of masks whose union is ``full``, searching sizes up to ``limit``."""
    for r in range(0, limit + 1):
        for combo in combinations(masks, r):
            acc = 0
            for m in combo:
                acc |= m
            if acc == full:
                return r
    return None


@dataclass
class SweepRow:
    graph: Graph
    n: int
    m: int
    diameter: int
    md: int
    cd: int
    ld: int
    bell_lb: int
    path_lb: int | None
    family: str | None
    approx_cd: int
    violations: list[str] = field(default_factory=list)
    cd_basis: tuple[int, ...] = ()
    set_cover_opt: int | None = None

    @property
    def ratio(self) -> float:
        return self.approx_cd / self.cd

    def csv_row(self) -> list:
        return [
            self.n, self.m, self.diameter, self.md, self.cd, self.ld, self.bell_lb,
            "-" if self.path_lb is None else self.path_lb,
            self.family or "-", self.approx_cd, f"{self.ratio:.4f}",
        ]


def analyse(g: Graph, *, budget: int = 10_000, set_cover_max_n: int = 6) -> SweepRow:
    """Compute MD, CD, LD exactly and check every inequality between them and the bounds."""
    dm = all_pairs_distances(g)
    n = g.n
    D = dm.diameter()
    cd_res = exact_cd(g, dm=dm)
    md = exact_md(g, dm=dm).value
    ld_res = exact_ld(g)
    cd, ld = cd_res.value, ld_res.value
    bad: list[str] = []

    if not cd_res.certified:
        bad.append("exact CD search not certified")
    if not is_centroidal_locating(dm, cd_res.basis):
        bad.append("exact basis fails verification")
    if not md <= cd <= 2 * ld:
        bad.append(f"sandwich MD <= CD <= 2LD broken: {md}, {cd}, {ld}")
    if D == 2 and ld - 1 > md:
        bad.append(f"diameter 2 but LD - 1 = {ld - 1} > MD = {md}")
    if (cd == n) != (g.max_degree() <= 1):
        bad.append(f"CD = n iff max degree <= 1 broken (CD={cd})")

    family = recognize_extremal(g) if n >= 3 else None
    if n >= 3 and (cd == n - 1) != (family is not None):
        bad.append(f"extremal mismatch: CD={cd}, n={n}, family={family}")

    approx_size = cd
    set_cover_opt = None
    if n >= 2:
        try:
            res = approx_cd(g, dm)
            approx_size = len(res.basis)
            if len(res.cover_basis) > 2 * len(res.cover):
                bad.append("|B(C)| > 2|C|")
        except AssertionError as exc:
            bad.append(f"approximation failed: {exc}")
            approx_size = n
        if n <= set_cover_max_n:
            inst = build_cd_setcover(dm)
            masks = list(inst.masks().values())
            limit = math.comb(cd, 2)
            set_cover_opt = min_set_cover_size(masks, (1 << len(inst.universe)) - 1, limit)
            if set_cover_opt is None:
                bad.append(f"optimal set cover exceeds C(CD, 2) = {limit}")

    lifted = ld_to_cd(g, ld_res.basis, dm)
    ell = len(uniquely_dominated(g, ld_res.basis))
    if not is_centroidal_locating(dm, lifted):
        bad.append("LD lift fails verification")
    if len(lifted) > ld + ell or len(lifted) > 2 * ld:
        bad.append(f"LD lift too large: {len(lifted)} (LD={ld}, l={ell})")

    report = bounds_report(g, dm=dm, exact=cd, approx=approx_size, md=md, ld=ld, budget=budget)
    bad.extend(report.violations())
    path_entry = report.entries["path_multiplicity"]
    return SweepRow(
        graph=g, n=n, m=g.m, diameter=D, md=md, cd=cd, ld=ld,
        bell_lb=report.entries["bell"].value,
        path_lb=path_entry.value if path_entry.applicable else None,
        family=family, approx_cd=approx_size, violations=bad,
        cd_basis=cd_res.basis, set_cover_opt=set_cover_opt,
    )


def sweep_exhaustive(max_n: int, min_n: int = 1, **kwargs) -> Iterator[SweepRow]:
    for g in connected_graphs(max_n, min_n):
        yield analyse(g, **kwargs)


def sweep_sample(count: int, n: int, p: float, seed: int, **kwargs) -> Iterator[SweepRow]:
    rng = random.Random(seed)
    for _ in range(count):
        yield analyse(random_connected_graph(n, p, rng), **kwargs)
