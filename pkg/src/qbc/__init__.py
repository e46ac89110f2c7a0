"""Maximum gamma-quasi-biclique search in bipartite graphs."""

from .bigraph import (BipartiteGraph, Selection, density, induced_stats,
                      load_edge_list, load_pajek_two_mode)
from .bounds import (SizeBounds, balanced_biclique_upper_bound,
                     edge_count_bounds, near_balanced_upper_bound,
                     quasi_clique_upper_bound)
from .errors import (EmptySideError, GraphParseError, HeuristicFailureError,
                     InfeasibleBoundsError, QbcError, SolverAdapterError,
                     UnsupportedFormError, VerificationError)
from .exact import (QUALITY, SIZE, SearchParams, Solution, SolutionPool,
                    branch_and_bound, enumerate_balanced, quality_objective,
                    sweep_oracle)
from .greedy import GreedyResult, greedy_quasi_biclique
from .mip import (Assignment, MipInstance, add_balance_constraints,
                  build_model1, build_model2, emit_lp, parse_solution_file,
                  run_external_solver, verify_assignment)
from .quasidef import (QuasiParams, as_fraction, delta_to_gamma,
                       epsilon_to_gamma, is_delta_quasi_biclique,
                       is_epsilon_quasi_biclique, is_gamma_quasi_biclique)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph", "Selection", "density", "induced_stats",
    "load_edge_list", "load_pajek_two_mode",
    "SizeBounds", "balanced_biclique_upper_bound", "edge_count_bounds",
    "near_balanced_upper_bound", "quasi_clique_upper_bound",
    "QbcError", "GraphParseError", "EmptySideError", "InfeasibleBoundsError",
    "HeuristicFailureError", "UnsupportedFormError", "SolverAdapterError",
    "VerificationError",
    "SIZE", "QUALITY", "SearchParams", "Solution", "SolutionPool",
    "branch_and_bound", "sweep_oracle", "enumerate_balanced",
    "quality_objective",
    "GreedyResult", "greedy_quasi_biclique",
    "MipInstance", "Assignment", "build_model1", "build_model2",
    "add_balance_constraints", "emit_lp", "parse_solution_file",
    "run_external_solver", "verify_assignment",
    "QuasiParams", "as_fraction", "delta_to_gamma", "epsilon_to_gamma",
    "is_gamma_quasi_biclique", "is_delta_quasi_biclique",
    "is_epsilon_quasi_biclique",
]
