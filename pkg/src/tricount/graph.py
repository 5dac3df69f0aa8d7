"""Core graph containers and validation.

The engine works on two representations:

* ``EdgeArray`` -- the input format: a flat array of directed (u, v) pairs
  in which every undirected edge appears exactly twice, once per direction.
* ``OrientedGraph`` -- the structure the counting phase reads: a compacted,
  degree-ordered directed edge list stored as two parallel arrays plus a
  CSR-style node offset array.

All containers are immutable after construction (the backing numpy arrays
are marked read-only) and safe to share across worker threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "EdgeArray",
    "DegreeOrder",
    "OrientedGraph",
    "GraphValidationError",
    "SelfLoopError",
    "AsymmetricEdgeError",
    "DuplicateEdgeError",
    "validate_edge_array",
    "normalize",
    "degrees_of",
    "edge_array_from_undirected",
    "max_out_degree_bound",
    "validate_oriented_graph",
]

MAX_VERTEX_ID = 2**32 - 1


class GraphValidationError(ValueError):
    """Base class for edge-array validation failures."""


class SelfLoopError(GraphValidationError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class AsymmetricEdgeError(GraphValidationError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"edge ({u}, {v}) has no reverse ({v}, {u})")


class DuplicateEdgeError(GraphValidationError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"duplicate edge ({u}, {v})")


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _as_pair_array(edges) -> np.ndarray:
    """Coerce a raw pair sequence to a read-only (k, 2) uint32 array."""
    if isinstance(edges, EdgeArray):
        return edges.edges
    arr = np.asarray(edges)
    if arr.size == 0:
        return _freeze(np.zeros((0, 2), dtype=np.uint32))
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected a sequence of (u, v) pairs, got shape {arr.shape}")
    if arr.dtype.kind not in "iu":
        raise ValueError(f"vertex ids must be integers, got dtype {arr.dtype}")
    lo, hi = int(arr.min()), int(arr.max())
    if lo < 0 or hi > MAX_VERTEX_ID:
        raise ValueError(f"vertex ids must fit in an unsigned 32-bit integer, got {lo if lo < 0 else hi}")
    return _freeze(np.ascontiguousarray(arr, dtype=np.uint32))


def pack_edge_keys(pairs: np.ndarray) -> np.ndarray:
    """Pack (first, second) pairs into 64-bit keys, first vertex in the high bits.

    Sorting these keys orders edges by first vertex, ties broken by second,
    which is exactly the grouping the node array needs.
    """
    p = pairs.astype(np.uint64)
    return (p[:, 0] << 32) | p[:, 1]


def unpack_edge_keys(keys: np.ndarray) -> np.ndarray:
    pairs = np.empty((keys.shape[0], 2), dtype=np.uint32)
    pairs[:, 0] = keys >> 32
    pairs[:, 1] = keys & np.uint64(0xFFFFFFFF)
    return pairs


@dataclass(eq=False)
class EdgeArray:
    """Undirected graph stored as directed (u, v) pairs, one per direction.

    ``num_vertices`` is always derived as ``1 + max vertex id`` (0 for an
    empty edge list); gaps in the id space become isolated vertices.
    """

    edges: np.ndarray
    num_vertices: int = field(init=False)

    def __post_init__(self):
        self.edges = _as_pair_array(self.edges)
        self.num_vertices = int(self.edges.max()) + 1 if self.edges.size else 0

    @property
    def num_undirected_edges(self) -> int:
        return self.edges.shape[0] // 2

    def pairs(self) -> list[tuple[int, int]]:
        return [tuple(p) for p in self.edges.tolist()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeArray):
            return NotImplemented
        return np.array_equal(self.edges, other.edges)

    def __repr__(self) -> str:
        return f"EdgeArray(num_vertices={self.num_vertices}, directed_entries={self.edges.shape[0]})"


@dataclass(eq=False)
class DegreeOrder:
    """Undirected degree per vertex; induces the strict total order (deg(v), v)."""

    degrees: np.ndarray

    def __post_init__(self):
        self.degrees = _freeze(np.ascontiguousarray(self.degrees, dtype=np.int64))

    def precedes(self, u: int, v: int) -> bool:
        du, dv = int(self.degrees[u]), int(self.degrees[v])
        return (du, u) < (dv, v)


@dataclass(eq=False)
class OrientedGraph:
    """Degree-ordered directed graph in unzipped (structure-of-arrays) CSR form.

    ``edge_dst[node_offsets[v]:node_offsets[v + 1]]`` is the sorted out-adjacency
    list of ``v``; ``edge_src`` carries the matching source of every entry so a
    worker can read an edge without consulting the offsets.
    """

    edge_src: np.ndarray
    edge_dst: np.ndarray
    node_offsets: np.ndarray

    def __post_init__(self):
        self.edge_src = _freeze(np.ascontiguousarray(self.edge_src, dtype=np.uint32))
        self.edge_dst = _freeze(np.ascontiguousarray(self.edge_dst, dtype=np.uint32))
        self.node_offsets = _freeze(np.ascontiguousarray(self.node_offsets, dtype=np.int64))

    @property
    def num_vertices(self) -> int:
        return self.node_offsets.shape[0] - 1

    @property
    def m_dir(self) -> int:
        return self.edge_dst.shape[0]

    @property
    def out_degrees(self) -> np.ndarray:
        return np.diff(self.node_offsets)

    def adjacency(self, v: int) -> np.ndarray:
        return self.edge_dst[self.node_offsets[v] : self.node_offsets[v + 1]]

    def undirected_degrees(self) -> np.ndarray:
        """Original undirected degrees, reconstructed as out-degree + in-degree."""
        return self.out_degrees + np.bincount(self.edge_dst, minlength=self.num_vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return (
            np.array_equal(self.edge_src, other.edge_src)
            and np.array_equal(self.edge_dst, other.edge_dst)
            and np.array_equal(self.node_offsets, other.node_offsets)
        )

    def __repr__(self) -> str:
        return f"OrientedGraph(num_vertices={self.num_vertices}, m_dir={self.m_dir})"


def validate_edge_array(edges) -> EdgeArray:
    """Check a raw pair sequence against the edge-array contract.

    Parameters
    ----------
    edges : sequence of (u, v) pairs or EdgeArray
        Raw input; every undirected edge must appear exactly once per direction.

    Returns
    -------
    EdgeArray
        The validated array.

    Raises
    ------
    SelfLoopError
        If any pair has u == v.
    DuplicateEdgeError
        If any directed pair appears more than once.
    AsymmetricEdgeError
        If some (u, v) is present but (v, u) is not.
    """
    arr = _as_pair_array(edges)
    if arr.size == 0:
        return EdgeArray(arr)

    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        i = int(np.argmax(loops))
        raise SelfLoopError(int(arr[i, 0]))

    keys = pack_edge_keys(arr)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    dup = sorted_keys[1:] == sorted_keys[:-1]
    if dup.any():
        # report the earliest second occurrence in input order
        i = int(order[1:][dup].min())
        raise DuplicateEdgeError(int(arr[i, 0]), int(arr[i, 1]))

    rev_keys = pack_edge_keys(arr[:, ::-1])
    has_reverse = np.isin(rev_keys, keys)
    if not has_reverse.all():
        i = int(np.argmin(has_reverse))
        raise AsymmetricEdgeError(int(arr[i, 0]), int(arr[i, 1]))

    return EdgeArray(arr)


def normalize(edges) -> EdgeArray:
    """Clean up a raw pair sequence into a valid edge array.

    Drops self-loops, deduplicates, and adds missing reverse edges. Vertex
    ids are never renumbered. Output pairs are lexicographically sorted, so
    the result is deterministic. Total on any finite input with ids that fit
    in 32 bits.
    """
    arr = _as_pair_array(edges)
    if arr.size == 0:
        return EdgeArray(arr)
    keep = arr[:, 0] != arr[:, 1]
    arr = arr[keep]
    if arr.size == 0:
        return EdgeArray(arr)
    canonical = np.sort(arr, axis=1)
    unique = np.unique(pack_edge_keys(canonical))
    return edge_array_from_undirected(unpack_edge_keys(unique))


def edge_array_from_undirected(pairs) -> EdgeArray:
    """Build an EdgeArray from unique canonical (u < v) undirected pairs.

    The caller owns deduplication and loop removal; both directions are
    emitted and sorted lexicographically.
    """
    arr = _as_pair_array(pairs)
    if arr.size == 0:
        return EdgeArray(arr)
    both = np.concatenate([arr, arr[:, ::-1]])
    keys = np.sort(pack_edge_keys(both))
    return EdgeArray(unpack_edge_keys(keys))


def degrees_of(g: EdgeArray) -> DegreeOrder:
    """Undirected degree of every vertex (each edge contributes 1 to each end)."""
    return DegreeOrder(np.bincount(g.edges[:, 0], minlength=g.num_vertices))


def max_out_degree_bound(m_dir: int) -> int:
    """ceil(sqrt(2 * m_dir)): the provable cap on oriented adjacency-list length."""
    x = 2 * m_dir
    if x <= 0:
        return 0
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def validate_oriented_graph(og: OrientedGraph) -> OrientedGraph:
    """Check every OrientedGraph invariant, raising ValueError on the first failure."""
    offs = og.node_offsets
    m = og.m_dir
    if offs.shape[0] < 1 or offs[0] != 0:
        raise ValueError("node_offsets must start at 0")
    if offs[-1] != m:
        raise ValueError(f"node_offsets must end at m_dir={m}, got {int(offs[-1])}")
    if (np.diff(offs) < 0).any():
        raise ValueError("node_offsets must be nondecreasing")
    if og.edge_src.shape[0] != m:
        raise ValueError("edge_src and edge_dst lengths differ")

    expected_src = np.repeat(np.arange(og.num_vertices, dtype=np.uint32), og.out_degrees)
    if not np.array_equal(og.edge_src, expected_src):
        raise ValueError("edge_src does not match the grouping implied by node_offsets")

    if m > 1:
        starts = np.zeros(m, dtype=bool)
        starts[offs[:-1][offs[:-1] < m]] = True
        ascending = (og.edge_dst[1:] > og.edge_dst[:-1]) | starts[1:]
        if not ascending.all():
            i = int(np.argmin(ascending)) + 1
            raise ValueError(f"adjacency list not strictly ascending at edge index {i}")

    deg = og.undirected_degrees()
    du = deg[og.edge_src]
    dv = deg[og.edge_dst]
    forward = (du < dv) | ((du == dv) & (og.edge_src < og.edge_dst))
    if not forward.all():
        i = int(np.argmin(forward))
        raise ValueError(
            f"edge ({int(og.edge_src[i])}, {int(og.edge_dst[i])}) is not degree-ordered forward"
        )

    max_out = int(og.out_degrees.max()) if og.num_vertices else 0
    bound = max_out_degree_bound(m)
    if max_out > bound:
        raise ValueError(f"max out-degree {max_out} exceeds bound {bound}")
    return og
