"""Independent brute-force oracles used to derive and pin expected values.

Nothing here calls the library's solvers or structural shortcuts: distances
come from a local BFS, predicates from direct multiset counting, existence
answers from exhaustive enumeration (pruned only on edge conflicts, which
every property implies).
"""

from collections import Counter, deque
from itertools import combinations

from socolor.graphs import Graph


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def square_oracle(g: Graph) -> Graph:
    pairs = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        pairs.extend((u, v) for v, d in dist.items() if v > u and 1 <= d <= 2)
    return Graph(g.n, pairs)


def girth_oracle(g: Graph) -> int | float:
    """Shortest cycle through each edge: drop the edge, measure the detour."""
    best = float("inf")
    for u, v in g.sorted_edges():
        pruned = Graph(g.n, [e for e in g.edges if e != (u, v)])
        dist = bfs_distances(pruned, u)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def acyclic_oracle(g: Graph) -> bool:
    """Union-find cycle detection."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def claw_free_oracle(g: Graph) -> bool:
    """Enumerate all 4-vertex subsets and look for an induced 3-star."""
    for quad in combinations(range(g.n), 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if all(g.has_edge(center, v) for v in leaves) and not any(
                g.has_edge(a, b) for a, b in combinations(leaves, 2)
            ):
                return False
    return True


def coloring_ok(g: Graph, assignment: tuple[int, ...], kind: str) -> bool:
    """Direct multiset-counting predicate for all four coloring properties."""
    for u, v in g.edges:
        if assignment[u] == assignment[v]:
            return False
    if kind == "proper":
        return True
    if kind == "square":
        for w in range(g.n):
            nbrs = sorted(g.neighbors(w))
            for a, b in combinations(nbrs, 2):
                if assignment[a] == assignment[b]:
                    return False
        return True
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if not nbrs:
            continue
        counts = Counter(assignment[u] for u in nbrs)
        if kind == "odd":
            if not any(c % 2 for c in counts.values()):
                return False
        elif kind == "strong-odd":
            if any(c % 2 == 0 for c in counts.values()):
                return False
        else:
            raise ValueError(kind)
    return True


def exists_coloring(g: Graph, kind: str, k: int) -> bool:
    """Exhaustive existence check over all k^n assignments.

    Recursion in natural vertex order; the only pruning is an edge conflict
    with an earlier vertex, which no property of interest can repair.
    """
    assignment = [0] * g.n
    earlier = [sorted(u for u in g.neighbors(v) if u < v) for v in range(g.n)]

    def rec(v: int) -> bool:
        if v == g.n:
            return coloring_ok(g, tuple(assignment), kind)
        for c in range(1, k + 1):
            if any(assignment[u] == c for u in earlier[v]):
                continue
            assignment[v] = c
            if rec(v + 1):
                return True
        assignment[v] = 0
        return False

    return rec(0)


def all_valid_colorings(g: Graph, kind: str, k: int) -> list[tuple[int, ...]]:
    out = []
    assignment = [0] * g.n

    def rec(v: int) -> None:
        if v == g.n:
            if coloring_ok(g, tuple(assignment), kind):
                out.append(tuple(assignment))
            return
        for c in range(1, k + 1):
            assignment[v] = c
            rec(v + 1)
        assignment[v] = 0

    rec(0)
    return out


def chromatic_oracle(g: Graph, kind: str) -> int:
    for k in range(1, g.n + 1):
        if exists_coloring(g, kind, k):
            return k
    raise AssertionError("n colors always suffice")


def mad_oracle_small(g: Graph):
    """Exact mad by plain subset enumeration (Fractions, no bit tricks)."""
    from fractions import Fraction

    best = Fraction(0)
    for r in range(1, g.n + 1):
        for subset in combinations(range(g.n), r):
            s = set(subset)
            e = sum(1 for u, v in g.edges if u in s and v in s)
            best = max(best, Fraction(2 * e, r))
    return best
