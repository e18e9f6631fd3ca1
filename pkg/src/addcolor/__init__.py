"""Additive colorings: constructions, verifiers and exact oracles."""

from .core import FiniteAbelianGroup, Graph, GraphError, Hypergraph, Labeling, build_graph, crt_compose, crt_decompose, sum_profile
from .gadgets import build_gr, gr_explicit_coloring, gr_nonexistence, lift_coloring, np_reduction, z2_decide
from .io import FormatError, load_graph, parse_edge_list, parse_graph_json
from .listcolor import ListAssignment, Polynomial, cn_nonvanishing, list_additive_solve, tree_list_solve
from .modular import bipartite_mod12, hyper_zero_free, norin_weights
from .oracle import BudgetExceeded, SearchBudget, additive_labeling, eta_exact, group_additive_exists
from .orderings import degeneracy_order, hyper_order, tightness_witness
from .pipelines import color_girth13, color_norin, color_planar3, color_planar4
from .verify import Certificate, verify_additive

__version__ = "0.1.0"
