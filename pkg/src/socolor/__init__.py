"""socolor: exact tooling for strong odd colorings and their sparseness bounds.

Submodules:
  graphs          immutable graphs, generators, structural queries
  graphio         edge-list / graph6 / coloring file formats
  density         exact maximum average degree (min-cut and brute force)
  coloring        verifiers and complete decision/chromatic solvers
  cnf             DIMACS export of the strong odd coloring decision
  oddrep          systems of odd representatives
  configurations  forbidden-pattern scans and the discharging engine
  corpus          named fixtures and seeded corpus samplers
"""

__version__ = "0.1.0"

from .coloring import (
    Coloring,
    PartialColoring,
    Verdict,
    Violation,
    available_colors,
    bounds_report,
    chromatic,
    solve_decision,
    verify,
    verify_odd,
    verify_proper,
    verify_square,
    verify_strong_odd,
)
from .cnf import CnfDocument, export_cnf
from .configurations import (
    CATALOGS,
    ConfigMatch,
    ChargeLedger,
    RULESETS,
    discharge,
    discharging_bound_check,
    scan,
    theorem_check,
    z_set,
)
from .density import (
    SizeGuardError,
    corollary_premise,
    mad,
    mad_bruteforce,
    rational_str,
)
from .graphs import (
    Graph,
    Multigraph,
    Orientation,
    cartesian_product,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    from_edge_list,
    girth,
    is_claw_free,
    kd_profile,
    line_graph,
    path,
    petersen,
    random_graph,
    square,
)
from .graphio import (
    FormatError,
    format_coloring,
    format_edge_list,
    format_graph6,
    load_graph,
    parse_coloring,
    parse_edge_list,
    parse_graph6,
    save_graph,
)
from .oddrep import (
    OddRepInstance,
    OddRepSolution,
    brute_force_oddrep,
    construct_oddrep,
    solve_oddrep,
    verify_oddrep,
)
