"""Exact equitable graph coloring solver."""

from eqdsatur._core import (
    EquitableColoring,
    Graph,
    OracleResult,
    SolveResult,
    brute_force_chi_eq,
    coloring_text,
    greedy_maximal_clique,
    lower_bound,
    naive_heuristic,
    parse_dimacs,
    parse_dimacs_file,
    random_graph,
    solve,
    validate_equitable,
    write_dimacs,
)

__all__ = [
    "EquitableColoring",
    "Graph",
    "OracleResult",
    "SolveResult",
    "brute_force_chi_eq",
    "coloring_text",
    "greedy_maximal_clique",
    "lower_bound",
    "naive_heuristic",
    "parse_dimacs",
    "parse_dimacs_file",
    "random_graph",
    "solve",
    "validate_equitable",
    "write_dimacs",
]
