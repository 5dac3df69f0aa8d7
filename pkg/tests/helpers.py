"""Test-side graph builders and independent reference implementations.

Everything here is deliberately plain Python: the reference preprocessing
and the acyclicity check share no code with the package's vectorized paths.
"""
from __future__ import annotations

from collections import deque

import numpy as np

from tricount.graph import EdgeArray, edge_array_from_undirected


def complete_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def cycle_pairs(n: int) -> list[tuple[int, int]]:
    return [(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)]


def path_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def star_pairs(n_leaves: int) -> list[tuple[int, int]]:
    return [(0, i) for i in range(1, n_leaves + 1)]


def complete_bipartite_pairs(a: int, b: int) -> list[tuple[int, int]]:
    return [(i, a + j) for i in range(a) for j in range(b)]


def random_tree_pairs(rng: np.random.Generator, n: int) -> list[tuple[int, int]]:
    return [(int(rng.integers(0, v)), v) for v in range(1, n)]


def edge_array(pairs) -> EdgeArray:
    return edge_array_from_undirected(np.asarray(pairs, dtype=np.int64).reshape(-1, 2))


def petersen() -> EdgeArray:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return edge_array([(min(u, v), max(u, v)) for u, v in outer + inner + spokes])


def reference_preprocess(g: EdgeArray):
    """Sequential, list-based preprocessing: sort, degree-filter, regroup.

    Returns (edge_src, edge_dst, node_offsets) as plain lists for comparison
    against the vectorized pipeline.
    """
    pairs = sorted(tuple(p) for p in g.edges.tolist())
    deg = [0] * g.num_vertices
    for u, _ in pairs:
        deg[u] += 1
    directed = [(u, v) for u, v in pairs if (deg[u], u) < (deg[v], v)]
    src = [u for u, _ in directed]
    dst = [v for _, v in directed]
    offsets = [0] * (g.num_vertices + 1)
    for u in src:
        offsets[u + 1] += 1
    for i in range(g.num_vertices):
        offsets[i + 1] += offsets[i]
    return src, dst, offsets


def kahn_is_acyclic(edge_src, edge_dst, num_vertices: int) -> bool:
    """Topological-sort check over a directed edge list."""
    indeg = [0] * num_vertices
    out: list[list[int]] = [[] for _ in range(num_vertices)]
    for u, v in zip(list(edge_src), list(edge_dst)):
        out[int(u)].append(int(v))
        indeg[int(v)] += 1
    queue = deque(v for v in range(num_vertices) if indeg[v] == 0)
    seen = 0
    while queue:
        u = queue.popleft()
        seen += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return seen == num_vertices
