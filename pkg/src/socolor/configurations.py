"""Forbidden-configuration catalogs, the discharging engine, and bound checks.

A pattern is a local degree structure; a match carries a witness vertex
tuple that re-satisfies the pattern predicate.  The catalogs are closed and
versioned: "s3" supports the 20/7 charge bound, "s4.1" and "s4.2" the 30/11
bounds, "lemma2.4" is the parameterized family shared by all three.

Discharging starts every vertex at charge deg(v) and applies all rule
transfers simultaneously; rule applicability depends only on the original
degree structure, never on intermediate charges, so the ledger conserves
total charge exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, NamedTuple

from .coloring import chromatic
from .density import (
    MAD_20_7,
    MAD_30_11,
    SizeGuardError,
    corollary_premise,
    rational_str,
)
from .graphs import Graph


@dataclass(frozen=True)
class ConfigMatch:
    pattern: str
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"pattern": self.pattern, "witness": list(self.witness)}


class _DegreeContext:
    """Degree structure shared by pattern predicates and discharging rules."""

    def __init__(self, g: Graph):
        self.g = g
        self.deg = [g.degree(v) for v in range(g.n)]
        self.two_nbrs = [
            sum(1 for u in g.neighbors(v) if self.deg[u] == 2) for v in range(g.n)
        ]

    def is_3_1(self, v: int) -> bool:
        return self.deg[v] == 3 and self.two_nbrs[v] >= 1

    def is_4_3(self, v: int) -> bool:
        return self.deg[v] == 4 and self.two_nbrs[v] >= 3

    def count_3_1_neighbors(self, v: int) -> int:
        return sum(1 for u in self.g.neighbors(v) if self.is_3_1(u))


def z_set(g: Graph) -> frozenset[int]:
    """Degree-3 vertices with a 2-neighbor and at least two such neighbors in turn."""
    ctx = _DegreeContext(g)
    return frozenset(
        v
        for v in range(g.n)
        if ctx.is_3_1(v) and ctx.count_3_1_neighbors(v) >= 2
    )


# ---------------------------------------------------------------------------
# pattern matchers; each yields canonical witness tuples
# ---------------------------------------------------------------------------

def _low_degree(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for v in range(ctx.g.n):
        if ctx.deg[v] <= 1:
            yield (v,)


def _k_with_d_minus_1(degrees: Iterable[int]):
    degs = tuple(degrees)

    def matcher(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
        for v in range(ctx.g.n):
            if ctx.deg[v] in degs and ctx.two_nbrs[v] >= ctx.deg[v] - 1:
                yield (v,)

    return matcher


def _k_saturated(min_degree: int):
    def matcher(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
        for v in range(ctx.g.n):
            if ctx.deg[v] >= min_degree and ctx.two_nbrs[v] >= ctx.deg[v]:
                yield (v,)

    return matcher


def _triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    for u, v in g.sorted_edges():
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                yield (u, v, w)


def _triangle_with_small_and_2(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    """Triangle (v1, v2, v3) with deg(v2) <= c+1 and deg(v3) = 2; smallest role labeling."""
    c = params["c"]
    for tri in _triangles(ctx.g):
        found = None
        for v3 in tri:
            if ctx.deg[v3] != 2:
                continue
            for v2 in tri:
                if v2 == v3 or ctx.deg[v2] > c + 1:
                    continue
                (v1,) = (x for x in tri if x not in (v2, v3))
                cand = (v1, v2, v3)
                if found is None or cand < found:
                    found = cand
        if found:
            yield found


def _three_common_2_neighbors(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for x, y in combinations(range(ctx.g.n), 2):
        common = sorted(
            w for w in ctx.g.neighbors(x) & ctx.g.neighbors(y) if ctx.deg[w] == 2
        )
        if len(common) >= 3:
            yield (x, y, *common[:3])


def _saturated_with_low_neighbors(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    """d_(d-1)-vertex all of whose neighbors have degree <= Delta + c - d."""
    c = params["c"]
    delta = params["delta"]
    for v in range(ctx.g.n):
        d = ctx.deg[v]
        if not 2 <= d <= delta or ctx.two_nbrs[v] < d - 1:
            continue
        if all(ctx.deg[u] <= delta + c - d for u in ctx.g.neighbors(v)):
            yield (v,)


def _adjacent_3_1_pair(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for u, v in ctx.g.sorted_edges():
        if ctx.is_3_1(u) and ctx.is_3_1(v):
            yield (u, v)


def _3_vertex_two_3_1_neighbors(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for v in range(ctx.g.n):
        if ctx.deg[v] != 3:
            continue
        hits = sorted(u for u in ctx.g.neighbors(v) if ctx.is_3_1(u))
        for a, b in combinations(hits, 2):
            yield (v, a, b)


def _4_2_with_3_1_neighbor(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for v in range(ctx.g.n):
        if ctx.deg[v] == 4 and ctx.two_nbrs[v] >= 2:
            for u in sorted(ctx.g.neighbors(v)):
                if ctx.is_3_1(u):
                    yield (v, u)


def _2_vertex_3_neighbors_one_in_z(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    z = params["z"]
    for v in range(ctx.g.n):
        if ctx.deg[v] != 2:
            continue
        nbrs = sorted(ctx.g.neighbors(v))
        if all(ctx.deg[u] == 3 for u in nbrs) and any(u in z for u in nbrs):
            yield (v,)


def _4_3_with_3_or_4_3_neighbor(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for v in range(ctx.g.n):
        if not ctx.is_4_3(v):
            continue
        for u in sorted(ctx.g.neighbors(v)):
            if ctx.deg[u] == 3 or ctx.is_4_3(u):
                yield (v, u)


def _4_3_with_3_1_neighbor(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for v in range(ctx.g.n):
        if not ctx.is_4_3(v):
            continue
        for u in sorted(ctx.g.neighbors(v)):
            if ctx.is_3_1(u):
                yield (v, u)


def _3_1_with_two_3_1_neighbors(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for v in range(ctx.g.n):
        if not ctx.is_3_1(v):
            continue
        hits = sorted(u for u in ctx.g.neighbors(v) if ctx.is_3_1(u))
        for a, b in combinations(hits, 2):
            yield (v, a, b)


def _path_2333_with_back_edge(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    """Path v1 v2 v3 v4 with degrees 2,3,3,3 where v4 also touches v1 or v2."""
    g = ctx.g
    seen = set()
    for v2 in range(g.n):
        if ctx.deg[v2] != 3:
            continue
        for v1 in sorted(g.neighbors(v2)):
            if ctx.deg[v1] != 2:
                continue
            for v3 in sorted(g.neighbors(v2)):
                if v3 == v1 or ctx.deg[v3] != 3:
                    continue
                for v4 in sorted(g.neighbors(v3)):
                    if v4 in (v1, v2) or ctx.deg[v4] != 3:
                        continue
                    if g.has_edge(v4, v1) or g.has_edge(v4, v2):
                        witness = (v1, v2, v3, v4)
                        if witness not in seen:
                            seen.add(witness)
                            yield witness


def _3_1_triangle(ctx: _DegreeContext, params: dict) -> Iterator[tuple[int, ...]]:
    for tri in _triangles(ctx.g):
        if all(ctx.is_3_1(v) for v in tri):
            yield tri


class _Pattern(NamedTuple):
    matcher: Callable[[_DegreeContext, dict], Iterator[tuple[int, ...]]]
    needs_c: bool = False
    needs_z: bool = False


PATTERNS: dict[str, _Pattern] = {
    "L2.4-i": _Pattern(_low_degree),
    "L2.4-ii": _Pattern(_triangle_with_small_and_2, needs_c=True),
    "L2.4-iii": _Pattern(_three_common_2_neighbors),
    "L2.4-iv": _Pattern(_saturated_with_low_neighbors, needs_c=True),
    "S3-C1": _Pattern(_low_degree),
    "S3-C2": _Pattern(_k_with_d_minus_1((2, 3, 4))),
    "S3-C3": _Pattern(_k_saturated(5)),
    "S3-C4": _Pattern(_adjacent_3_1_pair),
    "S3-C5": _Pattern(_3_vertex_two_3_1_neighbors),
    "S3-C6": _Pattern(_4_2_with_3_1_neighbor),
    "S4.1-C1": _Pattern(_low_degree),
    "S4.1-C2": _Pattern(_k_with_d_minus_1((2, 3))),
    "S4.1-C3": _Pattern(_k_saturated(4)),
    "S4.1-C4": _Pattern(_2_vertex_3_neighbors_one_in_z, needs_z=True),
    "S4.1-C5": _Pattern(_4_3_with_3_or_4_3_neighbor),
    "S4.1-C5-weak": _Pattern(_4_3_with_3_1_neighbor),
    "S4.2-C1": _Pattern(_low_degree),
    "S4.2-C2": _Pattern(_k_with_d_minus_1((2, 3))),
    "S4.2-C3": _Pattern(_3_1_with_two_3_1_neighbors),
    "L3.3-path": _Pattern(_path_2333_with_back_edge),
    "L4.3-triangle": _Pattern(_3_1_triangle),
}

CATALOGS: dict[str, tuple[str, ...]] = {
    "lemma2.4": ("L2.4-i", "L2.4-ii", "L2.4-iii", "L2.4-iv"),
    "s3": ("S3-C1", "S3-C2", "S3-C3", "S3-C4", "S3-C5", "S3-C6"),
    "s4.1": ("S4.1-C1", "S4.1-C2", "S4.1-C3", "S4.1-C4", "S4.1-C5", "S4.1-C5-weak"),
    "s4.2": ("S4.2-C1", "S4.2-C2", "S4.2-C3"),
}


def resolve_catalog(catalog: str | Iterable[str]) -> tuple[str, ...]:
    if isinstance(catalog, str):
        if catalog in CATALOGS:
            return CATALOGS[catalog]
        if catalog in PATTERNS:
            return (catalog,)
        raise ValueError(
            f"unknown catalog {catalog!r}; expected one of {sorted(CATALOGS)} or a pattern id"
        )
    ids = tuple(catalog)
    for pid in ids:
        if pid not in PATTERNS:
            raise ValueError(f"unknown pattern id {pid!r}")
    return ids


def scan(
    g: Graph,
    catalog: str | Iterable[str],
    c: int | None = None,
    delta: int | None = None,
) -> list[ConfigMatch]:
    """All matches of the catalog's patterns, with canonical witness tuples.

    The parameterized patterns need c bound explicitly; delta defaults to
    the graph's maximum degree.
    """
    ids = resolve_catalog(catalog)
    ctx = _DegreeContext(g)
    params: dict = {"delta": delta if delta is not None else g.max_degree()}
    if c is not None:
        params["c"] = c
    matches = []
    for pid in ids:
        pattern = PATTERNS[pid]
        if pattern.needs_c and c is None:
            raise ValueError(f"pattern {pid} needs the parameter c")
        if pattern.needs_z and "z" not in params:
            params["z"] = z_set(g)
        matches.extend(ConfigMatch(pid, w) for w in pattern.matcher(ctx, params))
    return matches


def rematch(g: Graph, match: ConfigMatch, c: int | None = None, delta: int | None = None) -> bool:
    """Re-run the pattern predicate on a witness (the ConfigMatch invariant)."""
    return any(
        m.witness == match.witness for m in scan(g, (match.pattern,), c=c, delta=delta)
    )


# ---------------------------------------------------------------------------
# discharging
# ---------------------------------------------------------------------------

class Transfer(NamedTuple):
    sender: int
    receiver: int
    amount: Fraction
    rule: str


@dataclass(frozen=True)
class Rule:
    id: str
    amount: Fraction
    sends: Callable[[_DegreeContext, frozenset[int], int], bool]
    receives: Callable[[_DegreeContext, frozenset[int], int], bool]


@dataclass(frozen=True)
class RuleSet:
    id: str
    rules: tuple[Rule, ...]


def _is_2(ctx, z, v):
    return ctx.deg[v] == 2


def _is_3_1(ctx, z, v):
    return ctx.is_3_1(v)


def _is_3_1_or_4_3(ctx, z, v):
    return ctx.is_3_1(v) or ctx.is_4_3(v)


RULESETS: dict[str, RuleSet] = {
    "s3": RuleSet(
        "s3",
        (
            Rule(
                "R1",
                Fraction(3, 7),
                lambda ctx, z, v: ctx.deg[v] >= 3,
                _is_2,
            ),
            Rule(
                "R2",
                Fraction(1, 7),
                lambda ctx, z, v: (ctx.deg[v] == 3 and ctx.two_nbrs[v] == 0)
                or ctx.deg[v] >= 4,
                _is_3_1,
            ),
        ),
    ),
    "s4.1": RuleSet(
        "s4.1",
        (
            Rule(
                "R1",
                Fraction(3, 11),
                lambda ctx, z, v: ctx.deg[v] == 3 and v in z,
                _is_2,
            ),
            Rule(
                "R2",
                Fraction(4, 11),
                lambda ctx, z, v: ctx.deg[v] == 3 and v not in z,
                _is_2,
            ),
            Rule(
                "R3",
                Fraction(5, 11),
                lambda ctx, z, v: ctx.deg[v] >= 4,
                _is_2,
            ),
            Rule(
                "R4",
                Fraction(1, 11),
                lambda ctx, z, v: ctx.deg[v] == 4 and ctx.two_nbrs[v] <= 2,
                _is_3_1_or_4_3,
            ),
            Rule(
                "R5",
                Fraction(1, 11),
                lambda ctx, z, v: ctx.deg[v] >= 5
                or (ctx.deg[v] == 3 and ctx.two_nbrs[v] == 0),
                _is_3_1_or_4_3,
            ),
        ),
    ),
    "s4.2": RuleSet(
        "s4.2",
        (
            Rule(
                "R1",
                Fraction(4, 11),
                lambda ctx, z, v: ctx.deg[v] >= 3,
                _is_2,
            ),
            Rule(
                "R2",
                Fraction(1, 11),
                lambda ctx, z, v: ctx.deg[v] == 3 and ctx.two_nbrs[v] == 0,
                _is_3_1,
            ),
        ),
    ),
}

#: catalog whose emptiness certifies the rule set's minimum final charge
CHARGE_BOUNDS: dict[str, Fraction] = {
    "s3": MAD_20_7,
    "s4.1": MAD_30_11,
    "s4.2": MAD_30_11,
}


@dataclass(frozen=True)
class ChargeLedger:
    ruleset: str
    initial: tuple[Fraction, ...]
    final: tuple[Fraction, ...]
    transfers: tuple[Transfer, ...]

    def total_initial(self) -> Fraction:
        return sum(self.initial, Fraction(0))

    def total_final(self) -> Fraction:
        return sum(self.final, Fraction(0))

    def min_final(self) -> Fraction:
        return min(self.final)

    def to_json(self) -> dict:
        return {
            "ruleset": self.ruleset,
            "initial": [rational_str(x) for x in self.initial],
            "final": [rational_str(x) for x in self.final],
            "transfers": [
                {
                    "from": t.sender,
                    "to": t.receiver,
                    "amount": rational_str(t.amount),
                    "rule": t.rule,
                }
                for t in self.transfers
            ],
            "total_initial": rational_str(self.total_initial()),
            "total_final": rational_str(self.total_final()),
            "min_final": rational_str(self.min_final()) if self.final else None,
        }


def discharge(g: Graph, rules: RuleSet | str) -> ChargeLedger:
    """Apply every rule transfer simultaneously, starting from charge deg(v)."""
    ruleset = RULESETS[rules] if isinstance(rules, str) else rules
    ctx = _DegreeContext(g)
    z = z_set(g)
    initial = tuple(Fraction(d) for d in ctx.deg)
    delta = [Fraction(0)] * g.n
    transfers = []
    for rule in ruleset.rules:
        for v in range(g.n):
            if not rule.sends(ctx, z, v):
                continue
            for u in sorted(g.neighbors(v)):
                if rule.receives(ctx, z, u):
                    transfers.append(Transfer(v, u, rule.amount, rule.id))
                    delta[v] -= rule.amount
                    delta[u] += rule.amount
    final = tuple(initial[v] + delta[v] for v in range(g.n))
    return ChargeLedger(ruleset.id, initial, final, tuple(transfers))


def discharging_bound_check(
    g: Graph,
    rules: RuleSet | str,
    catalog: str | Iterable[str],
    bound: Fraction,
    c: int | None = None,
) -> dict:
    """If the graph is configuration-free, every final charge must reach the bound.

    A configuration-free graph with a vertex below the bound would contradict
    the counting argument the rule set encodes; such a vertex is reported as
    a red flag, never silently tolerated.
    """
    matches = scan(g, catalog, c=c)
    if matches:
        return {
            "config_free": False,
            "matches": [m.to_json() for m in matches],
            "bound": rational_str(bound),
            "ok": None,
        }
    ledger = discharge(g, rules)
    violating = [v for v in range(g.n) if ledger.final[v] < bound]
    return {
        "config_free": True,
        "matches": [],
        "bound": rational_str(bound),
        "min_final": rational_str(ledger.min_final()) if g.n else None,
        "violating": violating,
        "ok": not violating,
    }


# ---------------------------------------------------------------------------
# theorem instance checks
# ---------------------------------------------------------------------------

#: bound ids with premise description and palette bound as a function of Delta
_THEOREMS = (
    ("mad-20/7:Delta+4", "mad <= 20/7", lambda d: d + 4),
    ("mad-30/11,Delta>=4:Delta+3", "mad <= 30/11 and max degree >= 4", lambda d: d + 3),
    ("c4free-subcubic-30/11:6", "C4-free, max degree <= 3, mad <= 30/11", lambda d: 6),
    ("girth>=7:Delta+4", "girth >= 7 and (mad-2)(girth-2) < 4", lambda d: d + 4),
    ("girth>=8:Delta+3", "girth >= 8 and (mad-2)(girth-2) < 4", lambda d: d + 3),
)


def theorem_check(g: Graph, size_guard: int = 16, override: bool = False) -> dict:
    """Exact premise tests plus the strong odd chromatic number against each bound.

    The girth rows use the product test as the planarity surrogate; on
    forests the girth lower bounds hold vacuously and the product is not
    applicable, which counts as satisfied.
    """
    if g.n > size_guard and not override:
        raise SizeGuardError(
            f"theorem_check solves for the exact strong odd chromatic number; "
            f"n={g.n} exceeds the guard of {size_guard} (pass override to force)"
        )
    premise = corollary_premise(g)
    delta = premise["max_degree"]
    applicable = {
        "mad-20/7:Delta+4": premise["mad_le_20_7"],
        "mad-30/11,Delta>=4:Delta+3": premise["mad_le_30_11_delta_ge_4"],
        "c4free-subcubic-30/11:6": premise["c4_free_subcubic_mad_le_30_11"],
        "girth>=7:Delta+4": premise["girth"] >= 7 and premise["product_lt_4"] is not False,
        "girth>=8:Delta+3": premise["girth"] >= 8 and premise["product_lt_4"] is not False,
    }
    chi_so = None
    if any(applicable.values()):
        chi_so, _ = chromatic(g, "strong-odd")
    rows = []
    for tid, description, bound_fn in _THEOREMS:
        row = {"id": tid, "premise": description, "applicable": applicable[tid]}
        if applicable[tid]:
            row["bound"] = bound_fn(delta)
            row["chi_strong_odd"] = chi_so
            row["ok"] = chi_so <= row["bound"]
        else:
            row["reason"] = _inapplicable_reason(tid, premise)
        rows.append(row)
    return {
        "mad": rational_str(premise["mad"]),
        "girth": premise["girth"] if premise["girth"] != float("inf") else "inf",
        "max_degree": delta,
        "has_c4": premise["has_c4"],
        "chi_strong_odd": chi_so,
        "theorems": rows,
    }


def _inapplicable_reason(tid: str, premise: dict) -> str:
    mad_s = rational_str(premise["mad"])
    if tid == "mad-20/7:Delta+4":
        return f"mad {mad_s} > 20/7"
    if tid == "mad-30/11,Delta>=4:Delta+3":
        if premise["max_degree"] < 4:
            return f"max degree {premise['max_degree']} < 4"
        return f"mad {mad_s} > 30/11"
    if tid == "c4free-subcubic-30/11:6":
        if premise["has_c4"]:
            return "contains a 4-cycle"
        if premise["max_degree"] > 3:
            return f"max degree {premise['max_degree']} > 3"
        return f"mad {mad_s} > 30/11"
    if premise["product_lt_4"] is False:
        return "(mad-2)(girth-2) >= 4"
    threshold = 7 if "7" in tid else 8
    return f"girth {premise['girth']} < {threshold}"
