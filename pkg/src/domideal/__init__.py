"""Closed neighborhood ideals of graphs, their decompositions via minimal
dominating sets, and checks of the tree Cohen-Macaulay characterization."""

from .bitsets import Antichain, ScaleError, UniverseMismatch, VertexSet
from .domination import (
    Hypergraph,
    dominating_sets,
    is_domination_unmixed,
    is_minimal_dominating,
    minimal_dominating_sets,
    minimal_transversals,
)
from .graph import (
    Graph,
    GraphFormatError,
    Matching,
    all_trees,
    bipartition,
    closed_neighborhood,
    corona,
    is_dominating,
    is_tree,
    is_vertex_cover,
    maximum_matching,
    parse_edge_list,
    random_graph,
    random_tree,
    recognize_corona,
)
from .ideal import (
    Decomposition,
    Monomial,
    MonomialIdeal,
    closed_neighborhood_ideal,
    contains,
    height,
    intersect,
    irreducible_decomposition,
    is_complete_intersection,
    is_unmixed,
    minimize_generators,
    variable_ideal,
)
from .theorems import (
    CMKind,
    CMStatus,
    VerdictReport,
    cm_status,
    cm_status_of_tree,
    verify_corona_proposition,
    verify_decomposition,
    verify_ideal_equality_corollary,
    verify_matching_lemma,
    verify_tree_corollary,
    verify_tree_theorem,
    verify_vertex_cover_lemma,
)

__version__ = "0.1.0"
