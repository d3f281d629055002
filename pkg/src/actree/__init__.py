"""Acyclic-connected tree decomposition and shortest paths for digraphs.

The library decomposes a single-source directed graph into its A-C tree (a
minimum-width nesting decomposition built from the dominator tree and per
node strongly connected components), certifies the decomposition against
brute-force oracles, and runs single-source shortest paths with one small
priority queue per component in O(e + n log w) for nesting width w.
"""

from .ac_tree import (
    AcTree,
    DominanceGraph,
    ac_to_nesting_family,
    build_ac_tree,
    dominance_graphs,
    naive_dominance_graph,
    scc_topological,
)
from .dominators import (
    DominatorTree,
    brute_force_dominated_set,
    brute_force_dominates,
    compute_dominator_tree,
)
from .graph import (
    CycleError,
    FormatError,
    Graph,
    GraphError,
    NegativeWeightError,
    UnreachableNodeError,
    gen_complete,
    gen_layered,
    gen_nested,
    gen_random_dag,
    gen_random_digraph,
    nest,
    parse_dimacs_sp,
    parse_edge_list,
    prune_unreachable,
    serialize_dimacs_sp,
    serialize_edge_list,
)
from .nesting import (
    InvalidFamilyError,
    NestingFamily,
    brute_force_nesting_width,
    family_width,
    is_module,
    module_closure_check,
)
from .sssp import (
    SearchStats,
    ShortestPathResult,
    SptCheck,
    dag_sssp,
    dijkstra,
    recursive_dijkstra,
    verify_spt,
)

__version__ = "0.1.0"

__all__ = [
    "AcTree",
    "CycleError",
    "DominanceGraph",
    "DominatorTree",
    "FormatError",
    "Graph",
    "GraphError",
    "InvalidFamilyError",
    "NegativeWeightError",
    "NestingFamily",
    "SearchStats",
    "ShortestPathResult",
    "SptCheck",
    "UnreachableNodeError",
    "ac_to_nesting_family",
    "brute_force_dominated_set",
    "brute_force_dominates",
    "brute_force_nesting_width",
    "build_ac_tree",
    "compute_dominator_tree",
    "dag_sssp",
    "dijkstra",
    "dominance_graphs",
    "family_width",
    "gen_complete",
    "gen_layered",
    "gen_nested",
    "gen_random_dag",
    "gen_random_digraph",
    "is_module",
    "module_closure_check",
    "naive_dominance_graph",
    "nest",
    "parse_dimacs_sp",
    "parse_edge_list",
    "prune_unreachable",
    "recursive_dijkstra",
    "scc_topological",
    "serialize_dimacs_sp",
    "serialize_edge_list",
    "verify_spt",
]
