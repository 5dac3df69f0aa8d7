"""Independent reference counters used as ground truth in tests.

Both functions are deliberately self-contained, pure-Python code paths:
they share the EdgeArray container with the engine but none of its
preprocessing or counting logic, so a bug there cannot hide here.
"""
from __future__ import annotations

from .graph import EdgeArray

BRUTE_FORCE_VERTEX_LIMIT = 2048


class TooLargeError(ValueError):
    """Input exceeds the brute-force guard (accidental huge runs are expensive)."""


def brute_force_count(g: EdgeArray) -> int:
    """Count triangles by the O(n^3) triple loop over an adjacency matrix."""
    n = g.num_vertices
    if n > BRUTE_FORCE_VERTEX_LIMIT:
        raise TooLargeError(f"{n} vertices exceeds brute-force limit {BRUTE_FORCE_VERTEX_LIMIT}")
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges.tolist():
        adj[u][v] = True
    count = 0
    for u in range(n):
        row_u = adj[u]
        for v in range(u + 1, n):
            if row_u[v]:
                row_v = adj[v]
                for w in range(v + 1, n):
                    if row_u[w] and row_v[w]:
                        count += 1
    return count


def sequential_forward_count(g: EdgeArray) -> int:
    """Single-threaded textbook forward algorithm.

    Orders vertices by (degree, id), keeps only edges pointing up that order,
    sorts the filtered adjacency lists, and sums sorted-merge intersections
    over the remaining edges. Every triangle is counted exactly once.
    """
    n = g.num_vertices
    deg = [0] * n
    pairs = g.edges.tolist()
    for u, _ in pairs:
        deg[u] += 1

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        if (deg[u], u) < (deg[v], v):
            adj[u].append(v)
    for lst in adj:
        lst.sort()

    count = 0
    for u in range(n):
        for v in adj[u]:
            a, b = adj[u], adj[v]
            i = j = 0
            la, lb = len(a), len(b)
            while i < la and j < lb:
                if a[i] == b[j]:
                    count += 1
                    i += 1
                    j += 1
                elif a[i] < b[j]:
                    i += 1
                else:
                    j += 1
    return count
