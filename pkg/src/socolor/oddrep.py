"""Systems of odd representatives: constructive solver and brute-force oracle.

An instance is a list of color sets A_1..A_d with an anchor alpha in A_d;
a solution picks c_i in A_i with c_d = alpha such that every value used
appears an odd number of times.  The solver realizes the existence proof:
shrink the first d-1 sets to pairs, treat each pair as a multigraph edge on
the color universe, walk an ordering from the anchor that greedily extends
along edges ("chain" edges form a linear forest), orient all remaining edges
from later to earlier, then orient each chain edge by a parity rule; the
representative of A_i is the head of its arc.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import product

from .coloring import Verdict, Violation
from .density import SizeGuardError
from .graphs import Multigraph, Orientation

#: brute_force_oddrep refuses larger product spaces
BRUTEFORCE_PRODUCT_LIMIT = 10**6


@dataclass(frozen=True)
class OddRepInstance:
    sets: tuple[frozenset[int], ...]
    anchor: int

    def __post_init__(self):
        d = len(self.sets)
        if d < 2:
            raise ValueError(f"need at least 2 sets, got {d}")
        for i, s in enumerate(self.sets):
            if not s:
                raise ValueError(f"set {i} is empty")
            if i < d - 1 and len(s) < 2:
                raise ValueError(f"set {i} has {len(s)} colors; the first {d - 1} sets need at least 2")
        if self.anchor not in self.sets[-1]:
            raise ValueError(f"anchor {self.anchor} is not in the last set")

    @classmethod
    def from_lists(cls, sets, anchor: int) -> "OddRepInstance":
        return cls(tuple(frozenset(s) for s in sets), anchor)

    @property
    def d(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class OddRepSolution:
    sequence: tuple[int, ...]


@dataclass(frozen=True)
class OddRepTrace:
    """Internals of one solver run, for debugging and the orientation checks."""

    shrunk: tuple[frozenset[int], ...]
    colors: tuple[int, ...]  # multigraph index -> color
    multigraph: Multigraph
    visit_order: tuple[int, ...]  # multigraph indices in discovery order
    chain_edges: tuple[int | None, ...]  # per order position, chosen edge id
    orientation: Orientation

    def anchor_index(self) -> int:
        return self.visit_order[0]


def verify_oddrep(inst: OddRepInstance, sol: OddRepSolution) -> Verdict:
    """Membership c_i in A_i plus odd multiplicity of every used value.

    Violations reuse the (vertex, color, count) triple as (position, value,
    count); membership failures carry count 0.
    """
    if len(sol.sequence) != inst.d:
        raise ValueError(
            f"solution length {len(sol.sequence)} does not match instance length {inst.d}"
        )
    bad: list[Violation] = []
    for i, (c, s) in enumerate(zip(sol.sequence, inst.sets)):
        if c not in s:
            bad.append(Violation(i, c, 0))
    counts = Counter(sol.sequence)
    for i, c in enumerate(sol.sequence):
        if counts[c] % 2 == 0:
            bad.append(Violation(i, c, counts[c]))
    return Verdict("oddrep", not bad, tuple(bad))


def _shrink(inst: OddRepInstance, seed: int | None) -> tuple[frozenset[int], ...]:
    """Two-element subsets of the first d-1 sets: smallest colors, or seeded."""
    rng = random.Random(seed) if seed is not None else None
    out = []
    for s in inst.sets[:-1]:
        if rng is None:
            out.append(frozenset(sorted(s)[:2]))
        else:
            out.append(frozenset(rng.sample(sorted(s), 2)))
    return tuple(out)


def construct_oddrep(
    inst: OddRepInstance, shrink_seed: int | None = None
) -> tuple[OddRepSolution, OddRepTrace]:
    """Run the ordering-and-orientation construction and return its trace."""
    shrunk = _shrink(inst, shrink_seed)
    colors = sorted(set().union(*shrunk, {inst.anchor}))
    index = {c: i for i, c in enumerate(colors)}
    edges = [tuple(sorted((index[a], index[b]))) for a, b in (sorted(s) for s in shrunk)]
    mg = Multigraph(len(colors), edges)
    adjacency: dict[int, set[int]] = {i: set() for i in range(mg.n)}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)

    visit = [index[inst.anchor]]
    seen = set(visit)
    chain: list[int | None] = []
    chosen: set[int] = set()
    while len(visit) < mg.n:
        current = visit[-1]
        fresh = [u for u in adjacency[current] if u not in seen]
        if fresh:
            nxt = min(fresh)  # smallest color; indices are sorted by color
            pair = (current, nxt) if current < nxt else (nxt, current)
            eid = min(i for i, e in enumerate(edges) if e == pair and i not in chosen)
            chosen.add(eid)
            chain.append(eid)
        else:
            nxt = min(u for u in range(mg.n) if u not in seen)
            chain.append(None)
        visit.append(nxt)
        seen.add(nxt)
    chain.append(None)  # the last vertex never opens a chain edge

    position = {v: i for i, v in enumerate(visit)}
    heads: list[int | None] = [None] * len(edges)
    indeg = [0] * mg.n
    for eid, (a, b) in enumerate(edges):
        if eid in chosen:
            continue
        head = a if position[a] < position[b] else b  # later vertex points back
        heads[eid] = head
        indeg[head] += 1
    for pos, eid in enumerate(chain):
        if eid is None:
            continue
        tail, tip = visit[pos], visit[pos + 1]
        want = 0 if pos == 0 else 1
        head = tip if indeg[tail] % 2 == want else tail
        heads[eid] = head
        indeg[head] += 1

    orientation = Orientation(
        mg,
        tuple(
            (e[0] if heads[i] == e[1] else e[1], heads[i]) for i, e in enumerate(edges)
        ),
    )
    sequence = tuple(colors[heads[i]] for i in range(len(edges))) + (inst.anchor,)
    trace = OddRepTrace(
        shrunk, tuple(colors), mg, tuple(visit), tuple(chain), orientation
    )
    return OddRepSolution(sequence), trace


def solve_oddrep(inst: OddRepInstance, shrink_seed: int | None = None) -> OddRepSolution:
    return construct_oddrep(inst, shrink_seed)[0]


def brute_force_oddrep(inst: OddRepInstance) -> list[OddRepSolution]:
    """All valid solutions ending with the anchor, by product enumeration."""
    space = 1
    for s in inst.sets[:-1]:
        space *= len(s)
    if space > BRUTEFORCE_PRODUCT_LIMIT:
        raise SizeGuardError(
            f"product space {space} exceeds the limit of {BRUTEFORCE_PRODUCT_LIMIT}"
        )
    out = []
    for prefix in product(*(sorted(s) for s in inst.sets[:-1])):
        candidate = OddRepSolution(prefix + (inst.anchor,))
        if verify_oddrep(inst, candidate).ok:
            out.append(candidate)
    return out
