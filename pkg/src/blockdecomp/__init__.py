"""k-blocks, canonical nested separation systems and tree-decompositions."""
from .graph import Graph, GraphError, automorphisms, build_graph, components, min_set_separator, min_vertex_cut
from .separations import Separation, SeparationSet, make_separation, nested
from .blocks import Block, beta, is_K_robust, k_blocks, kappa, kappa_witness
from .structure import NestedSystem, TreeDecomposition, structure_tree, tree_decomposition, induced_separations, refines
from .extraction import extract_nested, separates_well
from .canonical import all_k_separations, canonical_systems, canonical_tree_decompositions, distinguishes_efficiently

__all__ = [
    "Graph",
    "GraphError",
    "automorphisms",
    "build_graph",
    "components",
    "min_set_separator",
    "min_vertex_cut",
    "Separation",
    "SeparationSet",
    "make_separation",
    "nested",
    "Block",
    "beta",
    "is_K_robust",
    "k_blocks",
    "kappa",
    "kappa_witness",
    "NestedSystem",
    "TreeDecomposition",
    "structure_tree",
    "tree_decomposition",
    "induced_separations",
    "refines",
    "extract_nested",
    "separates_well",
    "all_k_separations",
    "canonical_systems",
    "canonical_tree_decompositions",
    "distinguishes_efficiently",
]

__version__ = "0.1.0"
