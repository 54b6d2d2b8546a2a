"""Power dominating set toolkit.

Solvers (exact, decomposition-based approximation, greedy family),
the directed variant with its coloring dynamic program, region-based
lower-bound certificates, instance generators, and a CLI.
"""

from .decomposition import (
    NiceTreeDecomposition,
    TreeDecomposition,
    td_from_elimination_order,
    td_violation,
    to_nice,
    validate_td,
)
from .directed import (
    Coloring,
    coloring_from_domination,
    is_valid_coloring,
    origins,
)
from .dp import dp_solve
from .errors import (
    BudgetExceededError,
    DecompositionError,
    GraphError,
    ParseError,
)
from .exact import (
    ExactResult,
    exact_directed_pds,
    exact_dominating_set,
    exact_pds,
)
from .graph import (
    DirectedGraph,
    UndirectedGraph,
    exterior,
    neighborhood,
    underlying_undirected,
)
from .heuristics import (
    TieBreak,
    cleanup,
    greedy,
    partition_approx,
    proximity_greedy,
)
from .propagation import (
    KERNEL,
    DominationTrace,
    closure,
    closure_trace,
    directed_closure,
    is_feasible,
)
from .regions import every_solution_hits, is_strong, shrink_to_minimal
from .twd import ApproxResult, subtree_union, tree_exact, twd_approx

__version__ = "0.1.0"

__all__ = [
    "ApproxResult",
    "BudgetExceededError",
    "Coloring",
    "DecompositionError",
    "DirectedGraph",
    "DominationTrace",
    "ExactResult",
    "GraphError",
    "KERNEL",
    "NiceTreeDecomposition",
    "ParseError",
    "TieBreak",
    "TreeDecomposition",
    "UndirectedGraph",
    "cleanup",
    "closure",
    "closure_trace",
    "coloring_from_domination",
    "directed_closure",
    "dp_solve",
    "every_solution_hits",
    "exact_directed_pds",
    "exact_dominating_set",
    "exact_pds",
    "exterior",
    "greedy",
    "is_feasible",
    "is_strong",
    "is_valid_coloring",
    "neighborhood",
    "origins",
    "partition_approx",
    "proximity_greedy",
    "shrink_to_minimal",
    "subtree_union",
    "td_from_elimination_order",
    "td_violation",
    "to_nice",
    "tree_exact",
    "twd_approx",
    "underlying_undirected",
    "validate_td",
]
