"""Pipeline turning an EdgeArray into the OrientedGraph the counting phase reads.

Steps, in order: sort pairs (grouping them into concatenated adjacency
lists), build the node offset array, derive degrees from adjacent offsets,
drop every edge going from higher to lower degree (ties broken by id),
unzip the survivors into source/destination arrays, and rebuild the offsets
over the compacted result. Everything is vectorized and deterministic:
identical input yields a bit-identical OrientedGraph.
"""
from __future__ import annotations

import numpy as np

from .graph import (
    DegreeOrder,
    EdgeArray,
    OrientedGraph,
    pack_edge_keys,
    unpack_edge_keys,
)


def sort_edges(g: EdgeArray) -> EdgeArray:
    """Sort pairs lexicographically by (first, second).

    Pairs are packed into 64-bit keys with the first vertex in the high bits,
    sorted as plain integers, and unpacked; pair uniqueness makes stability
    irrelevant.
    """
    if g.edges.size == 0:
        return g
    keys = np.sort(pack_edge_keys(g.edges))
    return EdgeArray(unpack_edge_keys(keys))


def build_node_array(sorted_edges, num_vertices: int) -> np.ndarray:
    """Offsets such that edges with first vertex i occupy [offsets[i], offsets[i+1]).

    Accepts a sorted EdgeArray, a (k, 2) pair array, or a bare first-vertex
    column. Vertices with empty adjacency lists yield repeated offsets.
    """
    if isinstance(sorted_edges, EdgeArray):
        sorted_edges = sorted_edges.edges
    arr = np.asarray(sorted_edges)
    firsts = arr[:, 0] if arr.ndim == 2 else arr
    return np.searchsorted(firsts, np.arange(num_vertices + 1), side="left").astype(np.int64)


def orient_and_compact(g: EdgeArray, d: DegreeOrder) -> np.ndarray:
    """Keep the pairs (u, v) with (deg(u), u) < (deg(v), v), preserving order.

    Exactly one direction of every undirected edge survives, so the result
    has |edges| / 2 rows.
    """
    if g.edges.size == 0:
        return g.edges
    u = g.edges[:, 0]
    v = g.edges[:, 1]
    du = d.degrees[u]
    dv = d.degrees[v]
    forward = (du < dv) | ((du == dv) & (u < v))
    return g.edges[forward]


def unzip(directed: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split a (k, 2) pair array into contiguous source and destination arrays."""
    arr = np.asarray(directed, dtype=np.uint32)
    if arr.size == 0:
        empty = np.zeros(0, dtype=np.uint32)
        return empty, empty.copy()
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])


def preprocess(g: EdgeArray) -> OrientedGraph:
    """Run the full pipeline on a valid EdgeArray."""
    num_vertices = g.num_vertices
    sorted_g = sort_edges(g)
    offsets_all = build_node_array(sorted_g, num_vertices)
    # degree of v = difference of adjacent offset cells
    degrees = DegreeOrder(np.diff(offsets_all))
    directed = orient_and_compact(sorted_g, degrees)
    edge_src, edge_dst = unzip(directed)
    node_offsets = build_node_array(edge_src, num_vertices)
    return OrientedGraph(edge_src, edge_dst, node_offsets)
