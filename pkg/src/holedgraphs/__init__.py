"""Blow-ups whose every hole has one fixed odd length ell >= 7, colored
constructively with at most ceil(ell*omega/(ell-1)) colors and certified
against independent brute-force oracles."""

from .graphs import (BudgetExceededError, Coloring, Graph, Report,
                     build_graph, chordless_cycles, clique_number_bruteforce,
                     coloring_from_json, coloring_to_json, graph_from_json,
                     graph_to_dot, graph_to_json, validate_ell_holed,
                     verify_proper)
from .oracle import exact_chromatic, greedy_fallback
from .structures import (CycleBlowupSpec, StaircaseLink, cycle_blowup_dot,
                         cycle_spec_from_json, cycle_spec_to_json,
                         cycle_structural_clique_number,
                         materialize_cycle_blowup, random_cycle_spec,
                         staircase_max_clique, validate_cycle_spec)
from .frameworks import (BlowupAssignment, FrameworkSpec, Tent,
                         default_assignment, framework_blowup_dot,
                         framework_from_json,
                         framework_structural_clique_number, framework_to_json,
                         materialize_framework_blowup, random_framework,
                         validate_assignment, validate_framework)
from .coloring import (BalancedColoring, PathConstraintError,
                       balanced_coloring, balanced_from_end_sequences,
                       balanced_is_proper, chi_bound, color_cycle_blowup,
                       color_framework, color_path_blowup,
                       cycle_color_sequences, cyclic_coloring, half_period,
                       min_clique_threshold, path_blowup_graph,
                       prop_balanced_check)
from .feasibility import (dispense_rank, feasibility_margin, summary_table,
                          sweep_feasibility)

__version__ = "0.1.0"


def structural_clique_number(spec, asg=None) -> int:
    """Clique number of a blow-up, from its spec alone."""
    if isinstance(spec, CycleBlowupSpec):
        return cycle_structural_clique_number(spec)
    if isinstance(spec, FrameworkSpec):
        return framework_structural_clique_number(spec, asg)
    raise TypeError(f"unsupported spec type: {type(spec).__name__}")


__all__ = [name for name in dir() if not name.startswith("_")]
