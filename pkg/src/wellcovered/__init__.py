"""Well-coveredness of graphs and their Cartesian products.

A graph is well-covered when every maximal independent set has the same
cardinality.  This package decides well-coveredness by bit-parallel
enumeration, constructs explicit distinct-cardinality witnesses in products
of suitable factor pairs, and ships a CLI harness that verifies the
product consistency claim exhaustively over small-graph corpora.
"""

from .corpus import GENERATION_CAP, generate_all_graphs, graph_to_mask
from .graphs import (
    GRAPH6_MAX_ORDER,
    CapExceeded,
    Graph,
    Graph6Error,
    ProductIndexMap,
    SubgraphMap,
    VertexSet,
    cartesian_product,
    closed_neighborhood,
    delete_closed_neighborhood,
    from_graph6,
    induced_subgraph,
    is_clique,
    is_connected,
    to_graph6,
    triangle_pairs,
)
from .independence import (
    DEFAULT_DECOMPOSITION_CAP,
    DEFAULT_ENUMERATION_CAP,
    GreedyDecomposition,
    IsolatableWitness,
    WellCoveredReport,
    clique_remainder,
    diagonal_set,
    enumerate_greedy_decompositions,
    enumerate_maximal_independent_sets,
    greedy_decomposition,
    independence_number,
    is_greedy_decomposition,
    is_independent,
    is_maximal_independent,
    is_well_covered,
    isolatable_vertices,
    mis_size_histogram,
    swap_step,
    well_covered,
)
from .theorem import (
    DisjointMisReport,
    FactorAnalysis,
    FactorDisjointMis,
    PairVerdict,
    ProductWitness,
    ViolationCertificate,
    WitnessInputs,
    analyze_factor,
    build_product_witness,
    check_disjoint_mis,
    verify_pair,
    witness_inputs,
    witness_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "DEFAULT_DECOMPOSITION_CAP",
    "DEFAULT_ENUMERATION_CAP",
    "DisjointMisReport",
    "FactorAnalysis",
    "FactorDisjointMis",
    "GENERATION_CAP",
    "GRAPH6_MAX_ORDER",
    "Graph",
    "Graph6Error",
    "GreedyDecomposition",
    "IsolatableWitness",
    "PairVerdict",
    "ProductIndexMap",
    "ProductWitness",
    "SubgraphMap",
    "VertexSet",
    "ViolationCertificate",
    "WellCoveredReport",
    "WitnessInputs",
    "analyze_factor",
    "build_product_witness",
    "cartesian_product",
    "check_disjoint_mis",
    "clique_remainder",
    "closed_neighborhood",
    "delete_closed_neighborhood",
    "diagonal_set",
    "enumerate_greedy_decompositions",
    "enumerate_maximal_independent_sets",
    "from_graph6",
    "generate_all_graphs",
    "graph_to_mask",
    "greedy_decomposition",
    "independence_number",
    "induced_subgraph",
    "is_clique",
    "is_connected",
    "is_greedy_decomposition",
    "is_independent",
    "is_maximal_independent",
    "is_well_covered",
    "isolatable_vertices",
    "mis_size_histogram",
    "swap_step",
    "to_graph6",
    "triangle_pairs",
    "verify_pair",
    "well_covered",
    "witness_inputs",
    "witness_invariants",
]
