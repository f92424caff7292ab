"""Boxicity and cubicity representations built from vertex covers.

The constructions produce explicit (unit) interval supergraphs whose meet is
the input graph, and :mod:`boxicity.oracle` computes exact values for small
graphs to check them against.
"""

from .box import (
    bipartite_bound,
    box_bound,
    build_bipartite_box_representation,
    build_box_representation,
    decompose,
    split_clique_side,
)
from .combinatorics import (
    VertexCover,
    approx_vertex_cover,
    check_chromatic_bound,
    chromatic_number,
    max_matching,
    min_maximal_matching,
    min_vertex_cover,
    matching_box_bound,
    minimalize_cover,
)
from .cub import build_cub_representation, cub_bound
from .errors import CapacityError, InputError, PreconditionError
from .graph import Bipartition, Graph, bipartition_of, complement, from_edge_list, generate, induced_subgraph
from .intervals import (
    IntervalAssignment,
    Representation,
    intersection_graph,
    is_interval,
    is_supergraph,
    is_unit_interval,
    meet,
    verify,
)
from .oracle import exact_boxicity, exact_cubicity, survey

__version__ = "0.1.0"
