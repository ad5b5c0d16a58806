"""Optimal edge colorings of multigraphs without odd subdivided houses, and
weighted colorings of h-perfect line graphs and t-perfect claw-free graphs."""

from .bounds import chi_weighted_formula, gamma_prime, gamma_weighted, kappa_edge, omega_weighted
from .budget import BudgetExceeded, SearchBudget
from .edge_color import EdgeColoring, color_edges, insert_edge, kempe_swap, verify_edge_coloring
from .multigraph import GraphInputError, Multigraph, line_graph
from .oracle import brute_chi_prime, brute_chi_weighted
from .structure import find_odd_c5p, h_m, petersen, square_of_circuit
from .vertex_color import (
    RejectedInput,
    color_line_graph_weighted,
    color_tperfect_clawfree,
    root_graph,
    verify_vertex_coloring,
)

__version__ = "0.1.0"
