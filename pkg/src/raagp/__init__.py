"""Certified computations for right-angled Artin pro-p groups.

Graph-side decisions (elementary type, coherence) with checkable witnesses,
graphs of groups and clique-separator splittings, and exact abelian
invariants of finitely presented groups and their index-p subgroups.
"""

from .classification import build_construction_tree, classify, render_expression
from .cohomology import cohomology_report
from .graph import (
    SimplicialGraph,
    connected_components,
    enumerate_cliques,
    induced_subgraph,
    parse_graph,
    render_graph,
)
from .graphs_of_groups import dirac_decompose, fundamental_presentation, tree_kernel_rank
from .presentations import (
    GroupPresentation,
    ModPCharacter,
    Word,
    abelianization_matrix,
    exponent_character,
    pro_p_abelian_invariants,
    raag_presentation,
)
from .recognition import chordality, find_dominating_vertex, find_induced_path4, find_induced_square
from .schreier import reidemeister_schreier
from .snf import smith_normal_form

__version__ = "0.1.0"
