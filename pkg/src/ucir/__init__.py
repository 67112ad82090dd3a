"""Exact ultimate categorical independence ratios of finite simple graphs.

The ultimate categorical independence ratio of a graph G is the limit of the
independence ratios of its categorical powers.  It equals the maximum of
|U| / (|U| + |N(U)|) over nonempty independent sets U when that maximum is at
most 1/2, and 1 otherwise, so this package computes it exactly with rational
arithmetic and ships machine-checkable certificates for the supporting
decomposition and counting arguments.
"""

from ._kernels import backend_name
from .graph6 import (
    Graph6Error,
    SMALL_GRAPH_CENSUS,
    assert_complete_census,
    decode_graph6,
    encode_graph6,
    read_corpus,
    write_corpus,
)
from .graphs import (
    Graph,
    ProductVertexMap,
    VertexCapExceeded,
    VertexSet,
    build_graph,
    categorical_power,
    categorical_product,
    disjoint_union,
    family,
    family_names,
    is_independent,
    neighborhood,
    vertex_cap,
)
from .independence import (
    IndependenceResult,
    for_each_independent_set,
    independence_ratio,
    max_independent_set,
)
from .matching import (
    Bipartition,
    Matching,
    bipartite_double_cover,
    bipartite_ultimate_ratio,
    has_fractional_perfect_matching,
    is_bipartite,
    max_bipartite_matching,
)
from .partition import (
    Certificate,
    CheckResult,
    ProductPartition,
    lifted_neighborhood,
    mate_partition,
    product_neighborhood,
    refined_partition,
    section,
    verify_boundary_chain,
    verify_partition_laws,
)
from .ratios import (
    RatioSummary,
    expansion_from_ratio,
    local_independence_ratio,
    ultimate_independence_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "Graph",
    "VertexSet",
    "ProductVertexMap",
    "VertexCapExceeded",
    "build_graph",
    "neighborhood",
    "is_independent",
    "categorical_product",
    "categorical_power",
    "disjoint_union",
    "family",
    "family_names",
    "vertex_cap",
    "Graph6Error",
    "SMALL_GRAPH_CENSUS",
    "assert_complete_census",
    "decode_graph6",
    "encode_graph6",
    "read_corpus",
    "write_corpus",
    "IndependenceResult",
    "max_independent_set",
    "independence_ratio",
    "for_each_independent_set",
    "RatioSummary",
    "local_independence_ratio",
    "ultimate_independence_ratio",
    "expansion_from_ratio",
    "Bipartition",
    "Matching",
    "is_bipartite",
    "max_bipartite_matching",
    "bipartite_double_cover",
    "has_fractional_perfect_matching",
    "bipartite_ultimate_ratio",
    "ProductPartition",
    "Certificate",
    "CheckResult",
    "mate_partition",
    "section",
    "lifted_neighborhood",
    "refined_partition",
    "product_neighborhood",
    "verify_partition_laws",
    "verify_boundary_chain",
]
