"""DIMACS CNF export: satisfiable iff the graph has a strong odd k-coloring.

Encoding per vertex v and color c:
  - exactly-one color per vertex (one long clause plus pairwise blockers),
  - an edge clause per edge and color,
  - a chained-XOR parity circuit over the indicators of c on N(v), with the
    implication "some neighbor of v uses c -> the chain parity is odd".
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring
from .graphs import Graph


@dataclass
class CnfDocument:
    n: int
    k: int
    num_vars: int
    clauses: list[tuple[int, ...]]
    color_var: dict[tuple[int, int], int]
    parity_var: dict[tuple[int, int, int], int]

    def to_dimacs(self) -> str:
        lines = [
            "c strong odd k-coloring encoding",
            f"c graph vertices: {self.n}, palette: 1..{self.k}",
            "c variable map:",
        ]
        for (v, c), var in sorted(self.color_var.items(), key=lambda kv: kv[1]):
            lines.append(f"c   var {var} = vertex {v} gets color {c}")
        for (v, c, i), var in sorted(self.parity_var.items(), key=lambda kv: kv[1]):
            lines.append(
                f"c   var {var} = parity of color {c} among the first {i} neighbors of vertex {v}"
            )
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines.extend(" ".join(map(str, cl)) + " 0" for cl in self.clauses)
        return "\n".join(lines) + "\n"

    def decode(self, true_vars: set[int]) -> Coloring:
        """Read the vertex colors out of a satisfying model."""
        mapping: dict[int, int] = {}
        for (v, c), var in self.color_var.items():
            if var in true_vars:
                if v in mapping:
                    raise ValueError(f"model assigns two colors to vertex {v}")
                mapping[v] = c
        return Coloring.from_mapping(mapping, self.n, self.k)

    def model_for(self, coloring: Coloring, g: Graph) -> set[int]:
        """The unique full model induced by a coloring (parity chain is forced)."""
        true_vars = {
            self.color_var[(v, coloring.assignment[v])] for v in range(g.n)
        }
        for v in range(g.n):
            for c in range(1, self.k + 1):
                parity = False
                for i, u in enumerate(sorted(g.neighbors(v)), start=1):
                    parity ^= coloring.assignment[u] == c
                    if parity:
                        true_vars.add(self.parity_var[(v, c, i)])
        return true_vars

    def evaluate(self, true_vars: set[int]) -> bool:
        return all(
            any((lit > 0) == (abs(lit) in true_vars) for lit in clause)
            for clause in self.clauses
        )


def export_cnf(g: Graph, k: int) -> CnfDocument:
    if k < 1:
        raise ValueError("palette size must be at least 1")
    color_var: dict[tuple[int, int], int] = {}
    nxt = 1
    for v in range(g.n):
        for c in range(1, k + 1):
            color_var[(v, c)] = nxt
            nxt += 1
    clauses: list[tuple[int, ...]] = []
    for v in range(g.n):
        vs = [color_var[(v, c)] for c in range(1, k + 1)]
        clauses.append(tuple(vs))
        clauses.extend((-a, -b) for i, a in enumerate(vs) for b in vs[i + 1 :])
    for u, v in g.sorted_edges():
        for c in range(1, k + 1):
            clauses.append((-color_var[(u, c)], -color_var[(v, c)]))
    parity_var: dict[tuple[int, int, int], int] = {}
    for v in range(g.n):
        nbrs = sorted(g.neighbors(v))
        if not nbrs:
            continue
        for c in range(1, k + 1):
            for i in range(1, len(nbrs) + 1):
                parity_var[(v, c, i)] = nxt
                nxt += 1
            x1 = color_var[(nbrs[0], c)]
            t1 = parity_var[(v, c, 1)]
            clauses.append((-t1, x1))
            clauses.append((t1, -x1))
            for i in range(2, len(nbrs) + 1):
                xi = color_var[(nbrs[i - 1], c)]
                ti = parity_var[(v, c, i)]
                tp = parity_var[(v, c, i - 1)]
                clauses.append((-ti, tp, xi))
                clauses.append((-ti, -tp, -xi))
                clauses.append((ti, -tp, xi))
                clauses.append((ti, tp, -xi))
            final = parity_var[(v, c, len(nbrs))]
            clauses.extend((final, -color_var[(u, c)]) for u in nbrs)
    return CnfDocument(g.n, k, nxt - 1, clauses, color_var, parity_var)
