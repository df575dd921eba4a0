from .graph import Graph, GraphError, components, load_edge_list, read_graph6_lines
from .matching import Matching, max_matching, matching_number
from .cover import VertexCover, min_vertex_cover, vertex_cover_number
from .decomposition import EGDecomposition, edmonds_gallai, is_factor_critical
from .invariants import degeneracy, mad, chromatic_number, optimal_colouring, clique_number
from .structure import (
    is_forest,
    is_tree,
    is_cycle,
    is_cactus,
    is_bipartite,
    is_regular,
    complete_bipartition,
)
from .enumeration import enumerate_graphs
