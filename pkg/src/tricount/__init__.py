"""Parallel triangle counting via degree-ordered edge orientation.

The pipeline validates an edge array (every undirected edge stored once per
direction), orients each edge from its lower-degree endpoint to its
higher-degree endpoint (ties by id), compacts the survivors into an
unzipped CSR structure, and intersects the sorted adjacency lists of every
remaining edge's endpoints across a pool of workers. Also ships graph
generators, brute-force oracles, serialization, and a benchmark harness.
"""

from .bench import BenchReport, amdahl_max_speedup, run_bench
from .count import (
    PartitionPlan,
    PhaseTimings,
    count_partitioned,
    count_triangles,
    count_with_timings,
    intersect_count,
)
from .generators import GeneratorSpec, generate
from .graph import (
    DegreeOrder,
    EdgeArray,
    OrientedGraph,
    degrees_of,
    edge_array_from_undirected,
    max_out_degree_bound,
    normalize,
    validate_edge_array,
    validate_oriented_graph,
)
from .io import (
    adjacency_to_edge_array,
    read_binary,
    read_edge_list,
    write_binary,
    write_edge_list,
)
from .metrics import transitivity, wedge_count
from .oracle import brute_force_count, sequential_forward_count
from .preprocess import preprocess

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "DegreeOrder",
    "EdgeArray",
    "GeneratorSpec",
    "OrientedGraph",
    "PartitionPlan",
    "PhaseTimings",
    "adjacency_to_edge_array",
    "amdahl_max_speedup",
    "brute_force_count",
    "count_partitioned",
    "count_triangles",
    "count_with_timings",
    "degrees_of",
    "edge_array_from_undirected",
    "generate",
    "intersect_count",
    "max_out_degree_bound",
    "normalize",
    "preprocess",
    "read_binary",
    "read_edge_list",
    "run_bench",
    "sequential_forward_count",
    "transitivity",
    "validate_edge_array",
    "validate_oriented_graph",
    "wedge_count",
    "write_binary",
    "write_edge_list",
]
