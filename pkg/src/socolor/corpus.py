"""Named fixtures and seeded corpus samplers shared by the test suites.

Everything here is deterministic: samplers walk a fixed seed sequence, so a
failing graph can be re-extracted from its seed.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Iterator

from .density import MAD_20_7, MAD_30_11, has_four_cycle, mad
from .graphs import (
    Graph,
    cartesian_product,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    line_graph,
    path,
    petersen,
    random_graph,
)


def lcf_graph(shifts: list[int], repeats: int) -> Graph:
    """Cubic Hamiltonian graph from LCF notation: a cycle plus shift chords."""
    n = len(shifts) * repeats
    pairs = [(i, (i + 1) % n) for i in range(n)]
    pairs += [(i, (i + shifts[i % len(shifts)]) % n) for i in range(n)]
    return Graph(n, pairs)


def heawood() -> Graph:
    """3-regular, 14 vertices, girth 6."""
    return lcf_graph([5, -5], 7)


def dodecahedron() -> Graph:
    """3-regular, 20 vertices, girth 5."""
    return lcf_graph([10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)


def prism(n: int) -> Graph:
    """Two n-cycles joined by a perfect matching; 3-regular."""
    return cartesian_product(cycle(n), complete(2))


def moebius_ladder(n: int) -> Graph:
    """Even cycle C_{2n} plus all n diameters; 3-regular."""
    return Graph(2 * n, [(i, (i + 1) % (2 * n)) for i in range(2 * n)] + [(i, i + n) for i in range(n)])


def subdivide_edges(g: Graph, targets: list[tuple[int, int]] | None = None) -> Graph:
    """Replace each target edge (default: all) by a length-2 path through a new vertex."""
    chosen = set(
        tuple(sorted(e)) for e in (targets if targets is not None else g.sorted_edges())
    )
    pairs = [e for e in g.sorted_edges() if e not in chosen]
    n = g.n
    for u, v in sorted(chosen):
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        pairs.append((u, n))
        pairs.append((n, v))
        n += 1
    return Graph(n, pairs)


def tight_charge_fixture() -> Graph:
    """Seven vertices whose final charges under the s3 rules all equal 20/7.

    Vertex 1 has degree 2; 0 and 4 are the degree-3 vertices with a
    2-neighbor; 2, 3, 5, 6 have none.  The graph avoids every s3 pattern.
    """
    return Graph(
        7,
        [
            (0, 1), (0, 2), (0, 3),
            (1, 4),
            (2, 3), (2, 5), (3, 6),
            (4, 5), (4, 6),
            (5, 6),
        ],
    )


def z_fixture() -> Graph:
    """Nine vertices; exactly the middle of the three-vertex spine is in the z set."""
    return Graph(
        9,
        [
            (0, 1), (1, 2),          # spine
            (0, 3), (0, 4), (3, 4),  # left end closes a triangle with two 2-vertices
            (1, 5), (5, 6),          # middle hangs a 2-chain
            (2, 7), (2, 8), (7, 8),  # right end mirrors the left
        ],
    )


def subdivided_k4() -> Graph:
    return subdivide_edges(complete(4))


def petersen_one_subdivision() -> Graph:
    g = petersen()
    return subdivide_edges(g, [g.sorted_edges()[0]])


def three_common_neighbors_fixture() -> Graph:
    """Two hubs joined by three length-2 paths (the K_{2,3} shape)."""
    return complete_bipartite(2, 3)


def named_fixtures() -> dict[str, Graph]:
    return {
        "k2": complete(2),
        "p3": path(3),
        "p4": path(4),
        "c4": cycle(4),
        "c5": cycle(5),
        "c6": cycle(6),
        "c7": cycle(7),
        "k4": complete(4),
        "k13": complete_bipartite(1, 3),
        "k23": complete_bipartite(2, 3),
        "k33": complete_bipartite(3, 3),
        "petersen": petersen(),
        "k2xk2": cartesian_product(complete(2), complete(2)),
        "k3xk3": cartesian_product(complete(3), complete(3)),
        "tight-charge": tight_charge_fixture(),
        "z-fixture": z_fixture(),
        "subdivided-k4": subdivided_k4(),
        "petersen-1sub": petersen_one_subdivision(),
    }


def cubic_corpus() -> list[tuple[str, Graph]]:
    """3-regular graphs (plus the tight fixture): none matches an s3 pattern."""
    out: list[tuple[str, Graph]] = [
        ("k4", complete(4)),
        ("k33", complete_bipartite(3, 3)),
        ("petersen", petersen()),
        ("heawood", heawood()),
        ("dodecahedron", dodecahedron()),
        ("tight-charge", tight_charge_fixture()),
    ]
    out += [(f"prism{n}", prism(n)) for n in range(3, 8)]
    out += [(f"moebius{n}", moebius_ladder(n)) for n in range(3, 7)]
    return out


def c4_free_subcubic_corpus() -> list[tuple[str, Graph]]:
    """Subcubic graphs without 4-cycles, for the 30/11 charge replay."""
    h, d = heawood(), dodecahedron()
    out = [
        ("petersen", petersen()),
        ("petersen-1sub", petersen_one_subdivision()),
        ("heawood", h),
        ("heawood-1sub", subdivide_edges(h, [h.sorted_edges()[0]])),
        ("dodecahedron", d),
        ("dodecahedron-1sub", subdivide_edges(d, [d.sorted_edges()[0]])),
        ("c5", cycle(5)),
        ("c7", cycle(7)),
        ("subdivided-k4", subdivided_k4()),
    ]
    for i in range(40):
        g = random_subcubic(8 + i % 6, (i % 4), 3000 + i, forbid_c4=True)
        if not has_four_cycle(g):
            out.append((f"subcubic(seed={3000 + i})", g))
    return out


def random_corpus(count: int, max_n: int = 10, seed: int = 0) -> list[tuple[str, Graph]]:
    """Seeded random graphs with n varied in 4..max_n and density varied with the seed."""
    out = []
    for i in range(count):
        s = seed + i
        n = 4 + (i % (max_n - 3))
        p = 0.15 + 0.6 * ((i * 7919) % 100) / 100
        out.append((f"random(n={n},p={p:.2f},seed={s})", random_graph(n, p, s)))
    return out


def random_tree_capped(n: int, cap: int, rng: random.Random) -> Graph:
    """Random tree built by attachment, respecting a maximum degree."""
    deg = [0] * n
    pairs = []
    for v in range(1, n):
        hosts = [u for u in range(v) if deg[u] < cap]
        u = rng.choice(hosts)
        pairs.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return Graph(n, pairs)


def random_subcubic(n: int, extra_edges: int, seed: int, forbid_c4: bool = False) -> Graph:
    """Random connected graph with maximum degree 3: a capped tree plus extra edges."""
    rng = random.Random(seed)
    g = random_tree_capped(n, 3, rng)
    deg = [g.degree(v) for v in range(n)]
    pairs = list(g.sorted_edges())
    have = set(pairs)
    for _ in range(extra_edges * 4):
        if sum(1 for e in pairs) - (n - 1) >= extra_edges:
            break
        u, v = rng.sample(range(n), 2)
        e = (u, v) if u < v else (v, u)
        if e in have or deg[u] >= 3 or deg[v] >= 3:
            continue
        candidate = Graph(n, pairs + [e])
        if forbid_c4 and has_four_cycle(candidate):
            continue
        pairs.append(e)
        have.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph(n, pairs)


def sample_until(
    predicate: Callable[[Graph], bool],
    generator: Callable[[int], Graph],
    count: int,
    seed_start: int = 0,
    max_tries: int = 100000,
) -> list[tuple[int, Graph]]:
    """First `count` seeds whose generated graph satisfies the predicate."""
    out = []
    seed = seed_start
    tries = 0
    while len(out) < count:
        if tries >= max_tries:
            raise RuntimeError(
                f"only {len(out)}/{count} graphs found after {max_tries} attempts"
            )
        g = generator(seed)
        if predicate(g):
            out.append((seed, g))
        seed += 1
        tries += 1
    return out


def _sparse_random(seed: int, lo: int = 8, hi: int = 12) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(lo, hi)
    m = rng.randint(n - 2, n + 2)
    pairs = rng.sample(list(combinations(range(n), 2)), m)
    return Graph(n, pairs)


def premise_corpus_mad_20_7(count: int, seed_start: int = 0) -> list[tuple[int, Graph]]:
    return sample_until(
        lambda g: mad(g)[0] <= MAD_20_7,
        _sparse_random,
        count,
        seed_start,
    )


def premise_corpus_mad_30_11_delta4(count: int, seed_start: int = 0) -> list[tuple[int, Graph]]:
    return sample_until(
        lambda g: g.max_degree() >= 4 and mad(g)[0] <= MAD_30_11,
        _sparse_random,
        count,
        seed_start,
    )


def premise_corpus_subcubic(count: int, seed_start: int = 0) -> list[tuple[int, Graph]]:
    def gen(seed: int) -> Graph:
        rng = random.Random(seed)
        n = rng.randint(8, 12)
        return random_subcubic(n, rng.randint(0, 3), seed, forbid_c4=True)

    return sample_until(
        lambda g: not has_four_cycle(g) and g.max_degree() <= 3 and mad(g)[0] <= MAD_30_11,
        gen,
        count,
        seed_start,
    )


def claw_free_families(max_multipartite_n: int = 8) -> Iterator[tuple[str, Graph]]:
    """Cycles, complete graphs, small complete multipartite, and line graphs."""
    for n in range(3, 9):
        yield f"c{n}", cycle(n)
    for n in range(1, 7):
        yield f"k{n}", complete(n)
    for parts in _partitions(max_multipartite_n):
        if len(parts) >= 2:
            name = "k_" + ",".join(map(str, parts))
            yield name, complete_multipartite(parts)
    for name, base in _line_graph_bases():
        yield f"line({name})", line_graph(base)


def _partitions(max_total: int) -> Iterator[tuple[int, ...]]:
    def rec(total: int, largest: int) -> Iterator[tuple[int, ...]]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in rec(total - first, first):
                yield (first,) + rest

    for total in range(2, max_total + 1):
        yield from rec(total, total)


def _line_graph_bases() -> Iterator[tuple[str, Graph]]:
    yield "p4", path(4)
    yield "p5", path(5)
    yield "c5", cycle(5)
    yield "c6", cycle(6)
    yield "k4", complete(4)
    yield "k13", complete_bipartite(1, 3)
    yield "k23", complete_bipartite(2, 3)
    for i in range(8):
        g = random_graph(6, 0.4, 1000 + i)
        if g.m <= 6:
            yield f"random(6,0.4,{1000 + i})", g
