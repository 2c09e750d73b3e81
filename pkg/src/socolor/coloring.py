"""Coloring model, verification predicates, and exact decision/chromatic solvers.

The four properties share one contract: a coloring is a total map from
vertices to colors 1..k.  Verifiers return a Verdict whose violations are
independently re-checkable (vertex, color, count) triples.  The decision
solver is a complete deterministic backtracking search; for the parity
properties it enforces neighborhood constraints as soon as they are decided
and prunes branches whose even color classes can no longer be repaired.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .density import SizeGuardError
from .graphs import Graph, is_claw_free, square

KINDS = ("proper", "odd", "strong-odd", "square")


class Violation(NamedTuple):
    vertex: int
    color: int
    count: int


@dataclass(frozen=True)
class Coloring:
    """Total assignment vertex -> color with palette 1..k."""

    assignment: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("palette size must be non-negative")
        for v, c in enumerate(self.assignment):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.k}")

    def color(self, v: int) -> int:
        return self.assignment[v]

    @classmethod
    def from_mapping(cls, mapping: dict[int, int], n: int, k: int | None = None) -> "Coloring":
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise ValueError(f"coloring is not total: vertices {missing} unassigned")
        if k is None:
            k = max(mapping.values(), default=0)
        return cls(tuple(mapping[v] for v in range(n)), k)

    def to_mapping(self) -> dict[int, int]:
        return dict(enumerate(self.assignment))


@dataclass(frozen=True)
class PartialColoring:
    """Partial assignment used by the deletion/extension bookkeeping."""

    assignment: dict[int, int]
    k: int

    def __post_init__(self):
        for v, c in self.assignment.items():
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.k}")


@dataclass(frozen=True)
class Verdict:
    kind: str
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __post_init__(self):
        if self.ok and self.violations:
            raise ValueError("a passing verdict cannot carry violations")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "violations": [
                {"vertex": v, "color": c, "count": n} for v, c, n in self.violations
            ],
        }


def _require_total(g: Graph, c: Coloring) -> None:
    if len(c.assignment) != g.n:
        raise ValueError(
            f"coloring covers {len(c.assignment)} vertices but the graph has {g.n}"
        )


def _proper_violations(g: Graph, c: Coloring) -> list[Violation]:
    out = []
    for v in range(g.n):
        own = c.assignment[v]
        same = sum(1 for u in g.neighbors(v) if c.assignment[u] == own)
        if same:
            out.append(Violation(v, own, same))
    return out


def verify_proper(g: Graph, c: Coloring) -> Verdict:
    """No edge may join two vertices of the same color."""
    _require_total(g, c)
    bad = _proper_violations(g, c)
    return Verdict("proper", not bad, tuple(bad))


def verify_odd(g: Graph, c: Coloring) -> Verdict:
    """Proper, and every non-isolated vertex sees some color an odd number of times.

    When some color class in a neighborhood has no odd representative, the
    verdict lists every (color, count) pair there -- all counts are even.
    """
    _require_total(g, c)
    bad = _proper_violations(g, c)
    if bad:
        return Verdict("odd", False, tuple(bad))
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if not nbrs:
            continue
        counts = Counter(c.assignment[u] for u in nbrs)
        if not any(cnt % 2 for cnt in counts.values()):
            bad.extend(Violation(v, color, cnt) for color, cnt in sorted(counts.items()))
    return Verdict("odd", not bad, tuple(bad))


def verify_strong_odd(g: Graph, c: Coloring) -> Verdict:
    """Proper, and every color present in a non-isolated neighborhood has odd multiplicity."""
    _require_total(g, c)
    bad = _proper_violations(g, c)
    if bad:
        return Verdict("strong-odd", False, tuple(bad))
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if not nbrs:
            continue
        counts = Counter(c.assignment[u] for u in nbrs)
        for color, cnt in sorted(counts.items()):
            if cnt % 2 == 0:
                bad.append(Violation(v, color, cnt))
    return Verdict("strong-odd", not bad, tuple(bad))


def verify_square(g: Graph, c: Coloring) -> Verdict:
    """Proper on the distance-<=2 graph."""
    _require_total(g, c)
    bad = _proper_violations(square(g), c)
    return Verdict("square", not bad, tuple(bad))


_VERIFIERS = {
    "proper": verify_proper,
    "odd": verify_odd,
    "strong-odd": verify_strong_odd,
    "square": verify_square,
}


def verify(g: Graph, c: Coloring, kind: str) -> Verdict:
    if kind not in _VERIFIERS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return _VERIFIERS[kind](g, c)


def available_colors(
    g: Graph,
    deleted: Iterable[int],
    phi: PartialColoring | dict[int, int],
    v: int,
    k: int,
) -> set[int]:
    """Palette colors not used on v's distance-<=2 neighbors outside the deleted set.

    phi may assign only vertices outside ``deleted``; v must be deleted.
    """
    dset = set(deleted)
    assignment = phi.assignment if isinstance(phi, PartialColoring) else phi
    if v not in dset:
        raise ValueError(f"vertex {v} is not in the deleted set")
    colored_inside = sorted(u for u in assignment if u in dset)
    if colored_inside:
        raise ValueError(f"deleted vertices {colored_inside} must be uncolored")
    sq = square(g)
    used = {
        assignment[u]
        for u in sq.neighbors(v)
        if u not in dset and u in assignment
    }
    return set(range(1, k + 1)) - used


# ---------------------------------------------------------------------------
# complete decision search
# ---------------------------------------------------------------------------

def _search(g: Graph, parity: str | None, k: int, symmetry_breaking: bool) -> tuple[int, ...] | None:
    """Backtracking core shared by the proper/odd/strong-odd decisions.

    Vertex order: descending degree, ties by index, so high-degree parity
    constraints bind early.  Bookkeeping per vertex v: multiplicity of each
    color among N(v), the number of uncolored neighbors, and the number of
    color classes with even non-zero (resp. odd) multiplicity.

    Pruning: each future assignment in N(v) flips exactly one class parity,
    so v is dead once its even non-zero classes outnumber its uncolored
    neighbors ("strong" parity); with everything colored, an odd-parity
    vertex needs at least one odd class ("some-odd" parity).
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    nbrs = [tuple(sorted(g.neighbors(v))) for v in range(n)]
    colors = [0] * n
    counts = [[0] * (k + 1) for _ in range(n)]
    uncolored = [g.degree(v) for v in range(n)]
    even_nz = [0] * n
    odd_nz = [0] * n

    def place(u: int, c: int) -> bool:
        colors[u] = c
        ok = True
        for v in nbrs[u]:
            row = counts[v]
            old = row[c]
            row[c] = old + 1
            if old == 0:
                odd_nz[v] += 1
            elif old % 2:
                odd_nz[v] -= 1
                even_nz[v] += 1
            else:
                even_nz[v] -= 1
                odd_nz[v] += 1
            uncolored[v] -= 1
            if parity == "strong":
                if even_nz[v] > uncolored[v]:
                    ok = False
            elif parity == "some-odd":
                if uncolored[v] == 0 and odd_nz[v] == 0:
                    ok = False
        if not ok:
            remove(u, c)
        return ok

    def remove(u: int, c: int) -> None:
        colors[u] = 0
        for v in nbrs[u]:
            row = counts[v]
            now = row[c]
            row[c] = now - 1
            if now == 1:
                odd_nz[v] -= 1
            elif now % 2:
                odd_nz[v] -= 1
                even_nz[v] += 1
            else:
                even_nz[v] -= 1
                odd_nz[v] += 1
            uncolored[v] += 1

    def extend(i: int, max_used: int) -> bool:
        if i == n:
            return True
        u = order[i]
        limit = min(k, max_used + 1) if symmetry_breaking else k
        row = counts[u]
        for c in range(1, limit + 1):
            if row[c]:
                continue  # a neighbor already uses c
            if not place(u, c):
                continue
            if extend(i + 1, c if c > max_used else max_used):
                return True
            remove(u, c)
        return False

    if extend(0, 0):
        return tuple(colors)
    return None


def solve_decision(
    g: Graph, kind: str, k: int, symmetry_breaking: bool = True
) -> Coloring | None:
    """A coloring of the given kind with palette 1..k, or None if none exists.

    The search is complete and deterministic; None is a proof of
    non-existence.  Palette symmetry breaking (color c+1 only after color c
    has appeared) is sound because all four properties are invariant under
    palette permutation.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if k < 1:
        raise ValueError("palette size must be at least 1")
    if kind == "square":
        inner = solve_decision(square(g), "proper", k, symmetry_breaking)
        return None if inner is None else Coloring(inner.assignment, k)
    parity = {"proper": None, "odd": "some-odd", "strong-odd": "strong"}[kind]
    result = _search(g, parity, k, symmetry_breaking)
    return None if result is None else Coloring(result, k)


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound (desk scale)."""
    best = 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))

    def grow(clique: list[int], candidates: list[int]) -> None:
        nonlocal best
        if len(clique) > best:
            best = len(clique)
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i <= best:
                return
            grow(clique + [v], [u for u in candidates[i + 1 :] if g.has_edge(u, v)])

    grow([], order)
    return best


#: brute-force clique lower bound is only attempted up to this size
CLIQUE_BOUND_LIMIT = 20


def chromatic(g: Graph, kind: str) -> tuple[int, Coloring]:
    """Minimum palette size admitting a coloring of the given kind, with witness.

    Searches k upward from the clique-number lower bound (sound for every
    kind here: each is a proper coloring of g, and the square kind is a
    proper coloring of square(g)).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if g.n == 0:
        return 0, Coloring((), 0)
    base = square(g) if kind == "square" else g
    start = clique_number(base) if base.n <= CLIQUE_BOUND_LIMIT else 1
    for k in range(max(1, start), g.n + 1):
        witness = solve_decision(g, kind, k)
        if witness is not None:
            return k, witness
    raise AssertionError("palette of size n always admits every kind")


class TheoryViolationError(RuntimeError):
    """An exact computation contradicted a proven relation; solver bug or red flag."""


#: bounds_report refuses larger graphs unless explicitly overridden
BOUNDS_SIZE_GUARD = 16


def bounds_report(g: Graph, size_guard: int = BOUNDS_SIZE_GUARD, override: bool = False) -> dict:
    """All four chromatic numbers plus the chain and claw-free cross-checks.

    Raises TheoryViolationError if the computed values violate
    chi <= chi_odd <= chi_strong_odd <= chi_square <= max_degree^2 + 1,
    or the claw-free equality chi_strong_odd == chi_square.
    """
    if g.n > size_guard and not override:
        raise SizeGuardError(
            f"bounds_report computes four exact chromatic numbers; n={g.n} exceeds "
            f"the guard of {size_guard} (pass override to force)"
        )
    chi, w_chi = chromatic(g, "proper")
    chi_o, w_o = chromatic(g, "odd")
    chi_so, w_so = chromatic(g, "strong-odd")
    chi_sq, w_sq = chromatic(g, "square")
    delta = g.max_degree()
    claw_free = is_claw_free(g)
    if not (chi <= chi_o <= chi_so <= chi_sq <= delta * delta + 1):
        raise TheoryViolationError(
            f"chain violated: chi={chi}, odd={chi_o}, strong-odd={chi_so}, "
            f"square={chi_sq}, max_degree={delta}"
        )
    if claw_free and chi_so != chi_sq:
        raise TheoryViolationError(
            f"claw-free graph with strong-odd {chi_so} != square {chi_sq}"
        )
    return {
        "chi": chi,
        "chi_odd": chi_o,
        "chi_strong_odd": chi_so,
        "chi_square": chi_sq,
        "max_degree": delta,
        "claw_free": claw_free,
        "witnesses": {
            "proper": w_chi,
            "odd": w_o,
            "strong-odd": w_so,
            "square": w_sq,
        },
    }
