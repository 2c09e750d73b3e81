"""Exact maximum average degree via min-cut density-feasibility tests.

Everything here is integer or Fraction arithmetic; no floats.  Induced
subgraphs suffice for the maximum: any subgraph H satisfies
|E(H)|/|V(H)| <= |E(G[V(H)])|/|V(H)| because adding back the induced edges
never shrinks the numerator.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .graphs import Graph, girth

#: subset-enumeration oracle refuses beyond this many vertices
BRUTEFORCE_LIMIT = 20

#: exact premise thresholds used by the bound checkers
MAD_20_7 = Fraction(20, 7)
MAD_30_11 = Fraction(30, 11)


class SizeGuardError(RuntimeError):
    """An operation refused an input larger than its documented guard."""


def rational_str(x: Fraction) -> str:
    """Render a Fraction as the canonical "num/den" wire form."""
    return f"{x.numerator}/{x.denominator}"


class _Dinic:
    """Max-flow on integer capacities; exact because Python ints are exact."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]  # adjacency: edge ids
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _augment(self, u: int, t: int, pushed: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return pushed
        while it[u] < len(self.head[u]):
            eid = self.head[u][it[u]]
            v = self.to[eid]
            if self.cap[eid] > 0 and level[v] == level[u] + 1:
                got = self._augment(v, t, min(pushed, self.cap[eid]), level, it)
                if got > 0:
                    self.cap[eid] -= got
                    self.cap[eid ^ 1] += got
                    return got
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * self.n
            while True:
                pushed = self._augment(s, t, 1 << 300, level, it)
                if pushed == 0:
                    break
                flow += pushed

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def induced_edge_count(g: Graph, subset: Iterable[int]) -> int:
    s = set(subset)
    return sum(1 for u, v in g.edges if u in s and v in s)


def subset_density(g: Graph, subset: Iterable[int]) -> Fraction:
    s = tuple(subset)
    if not s:
        raise ValueError("density of the empty set is undefined")
    return Fraction(2 * induced_edge_count(g, s), len(s))


def _denser_subset(g: Graph, threshold: Fraction) -> tuple[int, ...] | None:
    """A vertex set whose edge/vertex ratio strictly exceeds threshold, or None.

    Flow network: source -> v with capacity m*b, each edge as two arcs of
    capacity b, v -> sink with capacity m*b + 2a - deg(v)*b (all integers
    after scaling by the threshold denominator b).  The min cut equals
    n*m*b + 2a|S| - 2b|E(S)| minimized over S, so the max flow drops below
    n*m*b exactly when some S beats a/b.
    """
    a, b = threshold.numerator, threshold.denominator
    n, m = g.n, g.m
    source, sink = n, n + 1
    net = _Dinic(n + 2)
    for v in range(n):
        net.add_edge(source, v, m * b)
        net.add_edge(v, sink, m * b + 2 * a - g.degree(v) * b)
    for u, v in g.sorted_edges():
        net.add_edge(u, v, b)
        net.add_edge(v, u, b)
    flow = net.max_flow(source, sink)
    if flow >= n * m * b:
        return None
    subset = tuple(sorted(v for v in net.residual_reachable(source) if v < n))
    return subset


def max_density_subgraph(g: Graph) -> tuple[Fraction, tuple[int, ...]]:
    """Maximum |E(S)|/|S| over non-empty vertex sets S, with a witness.

    Binary search over Fractions; candidate densities e/v with v <= n are
    separated by at least 1/n^2, so once the bracket is narrower than that
    the best witness found so far is exactly optimal.
    """
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if g.m == 0:
        return Fraction(0), (0,)
    lo = Fraction(g.m, g.n)
    witness = tuple(range(g.n))
    hi = Fraction(g.m)
    gap = Fraction(1, g.n * g.n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        subset = _denser_subset(g, mid)
        if subset is None:
            hi = mid
        else:
            density = subset_density(g, subset) / 2
            if density <= mid:
                raise AssertionError("flow feasibility returned a non-improving subset")
            lo, witness = density, subset
    return lo, witness


def mad(g: Graph) -> tuple[Fraction, tuple[int, ...]]:
    """Maximum average degree 2|E(H)|/|V(H)| with a witness vertex set."""
    density, witness = max_density_subgraph(g)
    return 2 * density, witness


def mad_bruteforce(g: Graph) -> Fraction:
    """Exact mad by enumerating all non-empty vertex subsets (n <= 20)."""
    if g.n > BRUTEFORCE_LIMIT:
        raise SizeGuardError(
            f"mad_bruteforce enumerates 2^n subsets; n={g.n} exceeds the limit of {BRUTEFORCE_LIMIT}"
        )
    if g.n == 0:
        raise ValueError("graph has no vertices")
    n = g.n
    adj_mask = [sum(1 << u for u in g.neighbors(v)) for v in range(n)]
    edge_count = [0] * (1 << n)
    best_e, best_v = 0, 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        e = edge_count[rest] + (adj_mask[v] & rest).bit_count()
        edge_count[mask] = e
        size = mask.bit_count()
        if e * best_v > best_e * size:
            best_e, best_v = e, size
    return Fraction(2 * best_e, best_v)


def has_four_cycle(g: Graph) -> bool:
    """True iff some 4-cycle exists as a subgraph (two vertices with two common neighbors)."""
    for u, v in combinations(range(g.n), 2):
        if len(g.neighbors(u) & g.neighbors(v)) >= 2:
            return True
    return False


def corollary_premise(g: Graph) -> dict:
    """Exact-arithmetic premise tests for the sparseness-based bound theorems.

    The planarity surrogate is the product test (mad-2)(girth-2) < 4, which
    is "not applicable" on forests (infinite girth); girth lower bounds are
    vacuously satisfied there.
    """
    value, witness = mad(g)
    gi = girth(g)
    delta = g.max_degree()
    c4 = has_four_cycle(g)
    if gi == float("inf"):
        product_lt_4 = None
    else:
        product_lt_4 = (value - 2) * (gi - 2) < 4
    return {
        "mad": value,
        "mad_witness": witness,
        "girth": gi,
        "max_degree": delta,
        "has_c4": c4,
        "product_lt_4": product_lt_4,
        "mad_le_20_7": value <= MAD_20_7,
        "mad_le_30_11_delta_ge_4": value <= MAD_30_11 and delta >= 4,
        "c4_free_subcubic_mad_le_30_11": (not c4) and delta <= 3 and value <= MAD_30_11,
    }
