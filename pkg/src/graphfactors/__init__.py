"""Parity factors and caterpillar factors of multigraphs."""

from .caterpillar import (Caterpillar, CaterpillarDecomposition, caterpillar_defect,
                          classify_caterpillar, is_caterpillar, verify_caterpillar_factor)
from .cnf import CnfFormatError, CnfFormula, Lit, parse_dimacs, render_dimacs
from .ecf import ecf_accepts, ecf_edge_labels, ecf_tree_solve, local_label_rule, reduce_labels
from .graph import (Cycle, GraphFormatError, Multigraph, bridges, components, cut_edges_on_path,
                    is_connected, is_tree, parse_graph, perfect_matching, render_graph,
                    two_factor_cycles)
from .ocf import marked_edges, ocf_tree_solve, oddness_profile, star_condition_holds
from .oracle import (SearchLimitError, brute_caterpillar_factor, brute_x_parity_factor, dpll_sat,
                     generate)
from .parity import enumerate_cycles, local_minimize, parity_spanning_subgraph
from .parity_factor import (ConstructionError, ObstructionReport, b_factor_via_slack,
                            binary_degree_sequence, detect_obstructions, find_slack_connected_factor,
                            has_strong_parity_property, is_x_parity_factor, select_disjoint_paths,
                            x_parity_factor, x_parity_factor_cubic, x_parity_factor_triangle)
from .reductions import (GadgetMap, assignment_from_factor, build_gf_star, build_hf_star,
                         ecf_certificate_from_assignment, ocf_certificate_from_assignment)
from .trees import NotATreeError, RootedTree, root_tree

__version__ = "0.1.0"
