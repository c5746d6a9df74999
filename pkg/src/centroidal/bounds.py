"""Closed-form bounds on the centroidal dimension and a per-graph bounds report."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .graph import DistanceMatrix, Graph, all_pairs_distances


@lru_cache(maxsize=None)
def ordered_bell(k: int) -> int:
    """Number of ordered set partitions of a k-set: b(k) = sum_{i=1..k} C(k,i) b(k-i)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    table = [1]
    for j in range(1, k + 1):
        table.append(sum(math.comb(j, i) * table[j - i] for i in range(1, j + 1)))
    return table[k]


def bell_lower_bound(n: int) -> int:
    """Smallest k >= 1 with b(k) >= n: no graph on n vertices has a smaller centroidal basis."""
    if n < 1:
        raise ValueError("n must be positive")
    k = 1
    while ordered_bell(k) < n:
        k += 1
    return k


def _cap_distance_layers(D: int, k: int) -> int:
    return (2 * D // 3 + 1) ** k + k * sum((2 * i - 1) ** (k - 1) for i in range(1, -(-D // 3) + 1))


def order_caps(D: int, k: int) -> dict[str, int]:
    """Every applicable upper bound on the order of a diameter-D graph with a size-k centroidal locating set."""
    if D < 1 or k < 1:
        raise ValueError("D and k must be positive")
    caps = {"k_plus_D_pow_k": k + D**k}
    if D >= 2:
        caps["distance_layers"] = _cap_distance_layers(D, k)
    if D == 2:
        caps["diameter2"] = 2**k + k - 1
    elif D == 3 and k >= 5:
        caps["diameter3"] = 3**k - 2 ** (k + 1) + 2
    return caps


def order_cap_diam(D: int, k: int) -> int:
    """Tightest of :func:`order_caps`."""
    return min(order_caps(D, k).values())


def diameter_lower_bound(n: int, D: int) -> int:
    """Smallest k whose order cap for diameter D admits n vertices."""
    if D == 0:
        return 1
    k = 1
    while order_cap_diam(D, k) < n:
        k += 1
    return k


@dataclass(frozen=True)
class StrictBound:
    """CD > sqrt(ratio); ``integer`` is the least integer strictly above the root."""

    ratio: Fraction
    value: float
    integer: int


def strict_sqrt_bound(ratio: Fraction) -> StrictBound:
    c = math.isqrt(ratio.numerator // ratio.denominator)
    while c * c <= ratio:
        c += 1
    return StrictBound(ratio, math.sqrt(ratio), c)


def lower_bound_paths(m: int, k_paths: int) -> StrictBound:
    """CD > sqrt(2m / k) when every vertex pair satisfies 2*k_even + k_odd <= k."""
    if m < 1 or k_paths < 1:
        raise ValueError("m and k_paths must be positive")
    return strict_sqrt_bound(Fraction(2 * m, k_paths))


@dataclass(frozen=True)
class PathCounts:
    k_odd: int
    k_even: int
    overflow: bool = False

    @property
    def weight(self) -> int:
        return 2 * self.k_even + self.k_odd


def path_multiplicity(g: Graph, u: int, v: int, budget: int = 10_000) -> PathCounts:
    """Count simple u-v paths by parity of length, giving up after ``budget`` paths."""
    if u == v:
        raise ValueError("endpoints must differ")
    counts = [0, 0]  # even, odd
    on_path = [False] * g.n
    on_path[u] = True
    # iterative DFS: stack of (vertex, depth, neighbour iterator)
    stack = [(u, 0, iter(sorted(g.neighbors(u))))]
    while stack:
        w, depth, it = stack[-1]
        nxt = next(it, None)
        if nxt is None:
            stack.pop()
            on_path[w] = False
            continue
        if on_path[nxt]:
            continue
        if nxt == v:
            counts[(depth + 1) % 2] += 1
            if counts[0] + counts[1] > budget:
                return PathCounts(counts[1], counts[0], overflow=True)
            continue
        on_path[nxt] = True
        stack.append((nxt, depth + 1, iter(sorted(g.neighbors(nxt)))))
    return PathCounts(k_odd=counts[1], k_even=counts[0])


def max_path_weight(g: Graph, budget: int = 10_000) -> int | None:
    """max over vertex pairs of 2*k_even + k_odd, or None if any pair overflows the budget."""
    best = 0
    for u, v in combinations(range(g.n), 2):
        pc = path_multiplicity(g, u, v, budget)
        if pc.overflow:
            return None
        best = max(best, pc.weight)
    return best


@dataclass
class BoundEntry:
    kind: str  # "lower" | "upper" | "info"
    value: int | None
    applicable: bool
    anchor: str


@dataclass
class BoundsReport:
    n: int
    m: int
    diameter: int
    entries: dict[str, BoundEntry] = field(default_factory=dict)
    exact: int | None = None
    approx: int | None = None
    md: int | None = None

    def lower(self) -> int:
        return max(e.value for e in self.entries.values() if e.applicable and e.kind == "lower")

    def upper(self) -> int:
        return min(e.value for e in self.entries.values() if e.applicable and e.kind == "upper")

    def violations(self) -> list[str]:
        """Applicable bounds contradicting each other or the supplied exact/approx values."""
        out = []
        lo, hi = self.lower(), self.upper()
        if lo > hi:
            out.append(f"lower bound {lo} exceeds upper bound {hi}")
        if self.exact is not None:
            for name, e in self.entries.items():
                if not e.applicable or e.value is None:
                    continue
                if e.kind == "lower" and e.value > self.exact:
                    out.append(f"{name}: lower bound {e.value} > exact {self.exact}")
                if e.kind == "upper" and e.value < self.exact:
                    out.append(f"{name}: upper bound {e.value} < exact {self.exact}")
        chain = self.entries.get("diameter2_ld_chain")
        if chain and chain.applicable and self.md is not None and chain.value > self.md:
            out.append(f"diameter 2: LD - 1 = {chain.value} > MD = {self.md}")
        return out

    def to_json(self) -> dict:
        return {name: asdict(e) for name, e in self.entries.items()}


def bounds_report(
    g: Graph,
    *,
    dm: DistanceMatrix | None = None,
    exact: int | None = None,
    approx: int | None = None,
    md: int | None = None,
    ld: int | None = None,
    budget: int = 10_000,
) -> BoundsReport:
    dm = dm or all_pairs_distances(g)
    dm.require_connected()
    n = g.n
    D = dm.diameter()
    report = BoundsReport(n=n, m=g.m, diameter=D, exact=exact, approx=approx, md=md)
    e = report.entries

    e["bell"] = BoundEntry("lower", bell_lower_bound(n), True, "n <= b(k)")
    e["asymptotic"] = BoundEntry("info", None, False, "asymptotic form, see Bell bound")
    diam_ok = n >= 2
    e["diameter_cap"] = BoundEntry(
        "lower", diameter_lower_bound(n, D) if diam_ok else None, diam_ok, "n <= order_cap(D, k)"
    )

    weight = max_path_weight(g, budget) if g.m else None
    if weight:
        e["path_multiplicity"] = BoundEntry(
            "lower", lower_bound_paths(g.m, weight).integer, True, "CD > sqrt(2m / k)"
        )
    else:
        e["path_multiplicity"] = BoundEntry("lower", None, False, "CD > sqrt(2m / k)")

    trivial = n - 1 if g.max_degree() >= 2 else n
    e["order"] = BoundEntry("upper", trivial, True, "CD <= n - 1 when max degree >= 2, else n")
    e["twice_ld"] = BoundEntry("upper", 2 * ld if ld is not None else None, ld is not None, "CD <= 2 LD")
    e["approx_witness"] = BoundEntry("upper", approx, approx is not None, "size of a verified greedy set")
    e["md"] = BoundEntry("lower", md, md is not None, "MD <= CD")
    chain = D == 2 and ld is not None
    e["diameter2_ld_chain"] = BoundEntry("lower", ld - 1 if chain else None, chain, "LD - 1 <= MD <= CD (diameter 2)")
    return report
