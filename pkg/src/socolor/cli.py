"""Command-line front end: JSON reports, exact rationals as "num/den" strings.

Exit codes: 0 = all checks pass, 1 = a check failed, 2 = usage or input
error.  Machine output is always JSON on stdout; --pretty renders a
human-readable view instead.
"""

from __future__ import annotations

import argparse
import glob
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .cnf import export_cnf
from .coloring import (
    Coloring,
    TheoryViolationError,
    bounds_report,
    chromatic,
    solve_decision,
    verify,
)
from .configurations import (
    CATALOGS,
    CHARGE_BOUNDS,
    RULESETS,
    discharge,
    discharging_bound_check,
    scan,
    theorem_check,
)
from .density import SizeGuardError, mad, rational_str
from .graphs import (
    PRNG_ID,
    Graph,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    girth,
    path,
    petersen,
    random_graph,
    square,
)
from .graphio import (
    FormatError,
    format_coloring,
    format_edge_list,
    load_graph,
    parse_coloring,
    save_graph,
)
from .oddrep import OddRepInstance, brute_force_oddrep, construct_oddrep, verify_oddrep


def _digest(g: Graph, source: str | None = None) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "degree_histogram": {str(d): c for d, c in sorted(g.degree_histogram().items())},
        "source": source,
    }


def _girth_json(value) -> int | str:
    return "inf" if value == math.inf else value


def _load_coloring_for(g: Graph, path: str) -> Coloring:
    with open(path, "r", encoding="ascii") as fh:
        mapping = parse_coloring(fh.read())
    return Coloring.from_mapping(mapping, g.n)


def _graph_payload(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.sorted_edges()]}


def _write_or_embed(g: Graph, out: str | None, results: dict, key: str = "graph") -> None:
    if out:
        save_graph(g, out)
        results["file"] = out
    else:
        results[key] = _graph_payload(g)


# ---------------------------------------------------------------------------
# subcommand handlers: populate (inputs, results) and return an exit code
# ---------------------------------------------------------------------------

def _cmd_gen(args, inputs, results) -> int:
    fam = args.family
    params = [int(x) if "." not in x else float(x) for x in args.params]
    if fam == "petersen":
        g = petersen()
    elif fam == "complete":
        g = complete(int(params[0]))
    elif fam == "complete-bipartite":
        g = complete_bipartite(int(params[0]), int(params[1]))
    elif fam == "cycle":
        g = cycle(int(params[0]))
    elif fam == "path":
        g = path(int(params[0]))
    elif fam == "random":
        g = random_graph(int(params[0]), float(params[1]), args.seed)
    else:
        raise FormatError(f"unknown family {fam!r}")
    inputs.update(_digest(g))
    results["family"] = fam
    _write_or_embed(g, args.output, results)
    return 0


def _cmd_mad(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    value, witness = mad(g)
    results["mad"] = rational_str(value)
    results["witness"] = list(witness)
    return 0


def _cmd_girth(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    results["girth"] = _girth_json(girth(g))
    return 0


def _cmd_square(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    _write_or_embed(square(g), args.output, results)
    return 0


def _cmd_product(args, inputs, results) -> int:
    g = load_graph(args.graph)
    h = load_graph(args.other)
    inputs["g"] = _digest(g, args.graph)
    inputs["h"] = _digest(h, args.other)
    _write_or_embed(cartesian_product(g, h), args.output, results)
    return 0


def _cmd_verify(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    c = _load_coloring_for(g, args.coloring)
    verdict = verify(g, c, args.kind)
    results.update(verdict.to_json())
    return 0 if verdict.ok else 1


def _cmd_chromatic(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    if args.max_k is not None:
        found = None
        for k in range(1, args.max_k + 1):
            witness = solve_decision(g, args.kind, k)
            if witness is not None:
                found = (k, witness)
                break
        if found is None:
            results["k"] = None
            results["max_k"] = args.max_k
            return 1
        k, witness = found
    else:
        k, witness = chromatic(g, args.kind)
    results["k"] = k
    results["kind"] = args.kind
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(format_coloring(witness.to_mapping()))
        results["coloring_file"] = args.output
    else:
        results["coloring"] = list(witness.assignment)
    return 0


def _cmd_bounds(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    report = bounds_report(g, override=args.guard_override)
    results.update(
        {
            "chi": report["chi"],
            "chi_odd": report["chi_odd"],
            "chi_strong_odd": report["chi_strong_odd"],
            "chi_square": report["chi_square"],
            "max_degree": report["max_degree"],
            "claw_free": report["claw_free"],
            "chain_ok": True,
        }
    )
    return 0


def _cmd_oddrep(args, inputs, results) -> int:
    with open(args.instance, "r", encoding="ascii") as fh:
        spec = json.load(fh)
    inst = OddRepInstance.from_lists(spec["sets"], spec["anchor"])
    inputs["sets"] = [sorted(s) for s in inst.sets]
    inputs["anchor"] = inst.anchor
    solution, trace = construct_oddrep(inst, shrink_seed=args.seed if args.seed else None)
    verdict = verify_oddrep(inst, solution)
    results["sequence"] = list(solution.sequence)
    results["ok"] = verdict.ok
    results["trace"] = {
        "shrunk": [sorted(s) for s in trace.shrunk],
        "visit_order": [trace.colors[i] for i in trace.visit_order],
        "arcs": [
            [trace.colors[a], trace.colors[b]] for a, b in trace.orientation.arcs
        ],
        "in_degrees": {
            str(trace.colors[v]): trace.orientation.in_degree(v)
            for v in range(trace.multigraph.n)
        },
    }
    if args.bruteforce:
        results["all_solutions"] = [
            list(s.sequence) for s in brute_force_oddrep(inst)
        ]
    return 0 if verdict.ok else 1


def _cmd_scan(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    matches = scan(g, args.catalog, c=args.c)
    results["catalog"] = args.catalog
    results["matches"] = [m.to_json() for m in matches]
    results["config_free"] = not matches
    return 0


def _cmd_discharge(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    ledger = discharge(g, args.rules)
    results["ledger"] = ledger.to_json()
    if args.check_bound:
        check = discharging_bound_check(g, args.rules, args.rules, CHARGE_BOUNDS[args.rules])
        results["bound_check"] = check
        if check["ok"] is False:
            return 1
    return 0


def _cmd_check_theorems(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    report = theorem_check(g, override=args.guard_override)
    results.update(report)
    failed = [row["id"] for row in report["theorems"] if row.get("ok") is False]
    results["failed"] = failed
    return 1 if failed else 0


def _cmd_export_cnf(args, inputs, results) -> int:
    g = load_graph(args.graph)
    inputs.update(_digest(g, args.graph))
    doc = export_cnf(g, args.k)
    results["k"] = args.k
    results["vars"] = doc.num_vars
    results["clauses"] = len(doc.clauses)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(doc.to_dimacs())
        results["file"] = args.output
    else:
        results["dimacs"] = doc.to_dimacs()
    return 0


def _corpus_files(directory: str) -> list[str]:
    files = []
    for pattern in ("*.edges", "*.g6", "*.graph6"):
        files.extend(glob.glob(os.path.join(directory, pattern)))
    return sorted(files)


def _cmd_corpus(args, inputs, results) -> int:
    files = _corpus_files(args.directory)
    inputs["directory"] = args.directory
    inputs["files"] = len(files)
    if not files:
        raise FormatError(f"no graph files (*.edges, *.g6) in {args.directory!r}")
    rows = []
    failures = []
    for path_ in files:
        g = load_graph(path_)
        row = {"file": path_, "digest": _digest(g, path_)}
        try:
            if args.suite == "chain":
                report = bounds_report(g, override=args.guard_override)
                row.update(
                    chi=report["chi"],
                    chi_odd=report["chi_odd"],
                    chi_strong_odd=report["chi_strong_odd"],
                    chi_square=report["chi_square"],
                    ok=True,
                )
            elif args.suite == "theorems":
                report = theorem_check(g, override=args.guard_override)
                bad = [r["id"] for r in report["theorems"] if r.get("ok") is False]
                row.update(failed=bad, ok=not bad)
            else:  # discharge
                checks = {}
                ok = True
                for rid, ruleset in sorted(RULESETS.items()):
                    ledger = discharge(g, ruleset)
                    conserved = ledger.total_initial() == ledger.total_final()
                    check = discharging_bound_check(g, ruleset, rid, CHARGE_BOUNDS[rid])
                    checks[rid] = {
                        "conserved": conserved,
                        "config_free": check["config_free"],
                        "bound_ok": check["ok"],
                    }
                    if not conserved or check["ok"] is False:
                        ok = False
                row.update(rulesets=checks, ok=ok)
        except (TheoryViolationError, SizeGuardError) as exc:
            row.update(ok=False, error=str(exc))
        rows.append(row)
        if not row["ok"]:
            failures.append(path_)
    results["suite"] = args.suite
    results["graphs"] = rows
    results["failures"] = failures
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="socolor",
        description="Exact strong odd coloring toolkit: solvers, verifiers, "
        "density bounds, and discharging checks.",
    )
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("gen", _cmd_gen, help="generate a named graph family")
    p.add_argument("family", choices=["petersen", "complete", "complete-bipartite", "cycle", "path", "random"])
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")

    p = add("mad", _cmd_mad, help="exact maximum average degree with witness")
    p.add_argument("graph")

    p = add("girth", _cmd_girth, help="shortest cycle length")
    p.add_argument("graph")

    p = add("square", _cmd_square, help="distance-<=2 graph")
    p.add_argument("graph")
    p.add_argument("-o", "--output")

    p = add("product", _cmd_product, help="Cartesian product of two graphs")
    p.add_argument("graph")
    p.add_argument("other")
    p.add_argument("-o", "--output")

    p = add("verify", _cmd_verify, help="check a coloring file against a property")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--kind", required=True, choices=["proper", "odd", "strong-odd", "square"])

    p = add("chromatic", _cmd_chromatic, help="minimum palette size with witness")
    p.add_argument("graph")
    p.add_argument("--kind", required=True, choices=["proper", "odd", "strong-odd", "square"])
    p.add_argument("--max-k", type=int)
    p.add_argument("-o", "--output")

    p = add("bounds", _cmd_bounds, help="all four chromatic numbers and the chain check")
    p.add_argument("graph")
    p.add_argument("--guard-override", action="store_true")

    p = add("oddrep", _cmd_oddrep, help="solve a system-of-odd-representatives instance")
    p.add_argument("instance", help='JSON file {"sets": [[...], ...], "anchor": int}')
    p.add_argument("--seed", type=int, default=0, help="randomize the pair shrink step")
    p.add_argument("--bruteforce", action="store_true", help="also enumerate all solutions")

    p = add("scan", _cmd_scan, help="find forbidden configurations")
    p.add_argument("graph")
    p.add_argument("--catalog", required=True)
    p.add_argument("--c", type=int, help="palette surplus for the parameterized patterns")

    p = add("discharge", _cmd_discharge, help="run a discharging rule set")
    p.add_argument("graph")
    p.add_argument("--rules", required=True, choices=sorted(RULESETS))
    p.add_argument("--check-bound", action="store_true",
                   help="also check the charge bound when configuration-free")

    p = add("check-theorems", _cmd_check_theorems, help="exact bound checks per theorem premise")
    p.add_argument("graph")
    p.add_argument("--guard-override", action="store_true")

    p = add("export-cnf", _cmd_export_cnf, help="DIMACS CNF for the strong odd decision")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")

    p = add("corpus", _cmd_corpus, help="run a suite over a directory of graph files")
    p.add_argument("directory")
    p.add_argument("--suite", required=True, choices=["chain", "theorems", "discharge"])
    p.add_argument("--guard-override", action="store_true")

    return parser


def _render_pretty(report: dict) -> str:
    lines = [f"socolor {report['command']}"]

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}{key}.", value[key])
        elif isinstance(value, list) and len(value) > 8:
            lines.append(f"  {prefix[:-1]} = [{len(value)} items]")
        else:
            lines.append(f"  {prefix[:-1]} = {value}")

    walk("", report["results"])
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    inputs: dict = {}
    results: dict = {}
    try:
        code = args.handler(args, inputs, results)
    except FormatError as exc:
        print(f"socolor: input error: {exc}", file=sys.stderr)
        return 2
    except SizeGuardError as exc:
        print(f"socolor: {exc}; use --guard-override to force", file=sys.stderr)
        return 2
    except TheoryViolationError as exc:
        print(f"socolor: RED FLAG: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError, IndexError) as exc:
        print(f"socolor: {exc}", file=sys.stderr)
        return 2
    report = {
        "command": args.command,
        "inputs": inputs,
        "results": results,
        "meta": {
            "tool": "socolor",
            "version": __version__,
            "prng": PRNG_ID,
            "seed": getattr(args, "seed", None),
            "timing_ms": round((time.monotonic() - started) * 1000, 3),
        },
    }
    if args.pretty:
        print(_render_pretty(report))
    else:
        print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
