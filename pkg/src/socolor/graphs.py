"""Immutable graph types, generators, and structural queries.

Vertices are dense integer indices 0..n-1 throughout; labelled inputs are
mapped at the I/O layer.  All types here are immutable after construction
and safe to share across concurrent readers.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

#: identifier for the seeded PRNG stream behind random_graph(), recorded in
#: JSON reports so fixtures can be regenerated byte-identically.
PRNG_ID = "python-mt19937"


class Graph:
    """Simple undirected graph with O(1) adjacency queries.

    Self-loops and duplicate edges are rejected; isolated vertices are
    allowed (some forbidden-structure detectors must see them).
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        edges: set[tuple[int, int]] = set()
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop ({u}, {v}) is not allowed")
            e = (u, v) if u < v else (v, u)
            if e in edges:
                continue
            edges.add(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for v in range(self.n):
            d = self.degree(v)
            hist[d] = hist.get(d, 0) + 1
        return hist

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from explicit vertex count and edge pairs, deduplicated."""
    return Graph(n, pairs)


class Multigraph:
    """Loopless multigraph: parallel edges are kept with multiplicity."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        es = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop ({u}, {v}) is not allowed")
            es.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(es))

    def __setattr__(self, name, value):
        raise AttributeError("Multigraph is immutable")

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge instance of a multigraph.

    ``arcs[i]`` is the (tail, head) orientation of ``base.edges[i]``.
    """

    base: Multigraph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.arcs) != len(self.base.edges):
            raise ValueError("every edge instance needs exactly one direction")
        for arc, edge in zip(self.arcs, self.base.edges):
            if tuple(sorted(arc)) != edge:
                raise ValueError(f"arc {arc} does not orient edge {edge}")

    def in_degree(self, v: int) -> int:
        return sum(1 for _, head in self.arcs if head == v)


# ---------------------------------------------------------------------------
# structural queries
# ---------------------------------------------------------------------------

def square(g: Graph) -> Graph:
    """Graph joining all pairs at distance 1 or 2 in g."""
    pairs = set(g.edges)
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for a, b in combinations(sorted(nbrs), 2):
            pairs.add((a, b))
    return Graph(g.n, pairs)


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests.

    BFS from every vertex; each non-tree edge (x, y) certifies a cycle of
    length at most depth[x] + depth[y] + 1, and for a shortest cycle some
    root on it attains equality.
    """
    best: int | float = math.inf
    for root in range(g.n):
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cand = depth[x] + depth[y] + 1
                    if cand < best:
                        best = cand
        if best == 3:
            break
    return best


def is_acyclic(g: Graph) -> bool:
    return girth(g) == math.inf


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (a, b) maps to index a * h.n + b."""
    pairs = []
    for a in range(g.n):
        for b, b2 in h.edges:
            pairs.append((a * h.n + b, a * h.n + b2))
    for a, a2 in g.edges:
        for b in range(h.n):
            pairs.append((a * h.n + b, a2 * h.n + b))
    return Graph(g.n * h.n, pairs)


def is_claw_free(g: Graph) -> bool:
    """True iff no vertex has three pairwise non-adjacent neighbors."""
    for v in range(g.n):
        nbrs = sorted(g.neighbors(v))
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c):
                return False
    return True


def kd_profile(g: Graph, v: int) -> tuple[int, int]:
    """(degree of v, number of degree-2 neighbors of v)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.degree(v), sum(1 for u in g.neighbors(v) if g.degree(u) == 2)


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge, adjacent iff the edges share an endpoint."""
    es = g.sorted_edges()
    pairs = [
        (i, j)
        for i, j in combinations(range(len(es)), 2)
        if set(es[i]) & set(es[j])
    ]
    return Graph(len(es), pairs)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite(m, n) needs m, n >= 1")
    return Graph(m + n, ((a, m + b) for a in range(m) for b in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -- i+5."""
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    return Graph(10, pairs)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise ValueError("parts must be positive")
    bounds = [0]
    for p in parts:
        bounds.append(bounds[-1] + p)
    pairs = []
    for i, j in combinations(range(len(parts)), 2):
        for a in range(bounds[i], bounds[i + 1]):
            for b in range(bounds[j], bounds[j + 1]):
                pairs.append((a, b))
    return Graph(bounds[-1], pairs)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a given seed.

    Pairs are visited in lexicographic order and included when the next
    draw of the PRNG_ID stream is below p.
    """
    if n < 1:
        raise ValueError("random_graph(n, p, seed) needs n >= 1")
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, pairs)
