"""Synthetic graph families for experiments and tests.

Random families (rmat, barabasi_albert, watts_strogatz, gnp) draw from
numpy's seedable PCG64 generator, so identical (family, params, seed)
always reproduces the same EdgeArray in this implementation. Triangle
counts of random instances are never hardcoded anywhere; tests check them
against the oracle counters instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import EdgeArray, edge_array_from_undirected

FAMILIES = ("rmat", "barabasi_albert", "watts_strogatz", "complete", "cycle", "path", "star", "gnp")

# quadrant split used by the DIMACS 10 challenge Kronecker corpus
RMAT_DEFAULT_PROBS = (0.57, 0.19, 0.19, 0.05)
RMAT_DEFAULT_EDGE_FACTOR = 16

# defaults produce a 1M-node / 50M-edge small-world instance
WS_DEFAULT_N = 1_000_000
WS_DEFAULT_K = 100
WS_DEFAULT_BETA = 0.1


class InvalidParamsError(ValueError):
    def __init__(self, param: str, message: str):
        self.param = param
        super().__init__(f"{param}: {message}")


@dataclass
class GeneratorSpec:
    """Family name, family-specific parameters, and an RNG seed."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    @classmethod
    def from_config(cls, text: str) -> "GeneratorSpec":
        """Parse a key=value-per-line config; requires a ``family`` key.

        Lines starting with '#' and blank lines are ignored. Values are
        parsed as int when possible, else float.
        """
        family = None
        seed = 0
        params: dict = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise InvalidParamsError("config", f"line {lineno} is not key=value: {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key == "family":
                family = value
            elif key == "seed":
                params_seed = _parse_number(key, value)
                seed = int(params_seed)
            else:
                params[key] = _parse_number(key, value)
        if family is None:
            raise InvalidParamsError("family", "config file does not set family")
        return cls(family=family, params=params, seed=seed)


def _parse_number(key: str, value: str):
    try:
        return int(value)
    except ValueError:
        try:
            return float(value)
        except ValueError:
            raise InvalidParamsError(key, f"not a number: {value!r}") from None


def _require_int(params: dict, key: str, minimum: int | None = None, maximum: int | None = None):
    if key not in params:
        raise InvalidParamsError(key, "missing required parameter")
    value = params[key]
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise InvalidParamsError(key, f"must be an integer, got {value!r}")
    value = int(value)
    if minimum is not None and value < minimum:
        raise InvalidParamsError(key, f"must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise InvalidParamsError(key, f"must be <= {maximum}, got {value}")
    return value


def _require_prob(params: dict, key: str):
    if key not in params:
        raise InvalidParamsError(key, "missing required parameter")
    value = float(params[key])
    if not 0.0 <= value <= 1.0:
        raise InvalidParamsError(key, f"must be in [0, 1], got {value}")
    return value


def generate(spec: GeneratorSpec) -> EdgeArray:
    """Dispatch on the family name; unknown families or parameters raise."""
    if spec.family not in FAMILIES:
        raise InvalidParamsError("family", f"unknown family {spec.family!r} (choose from {', '.join(FAMILIES)})")
    params = dict(spec.params)
    known = {
        "rmat": {"scale", "edge_factor", "a", "b", "c", "d"},
        "barabasi_albert": {"n", "m_attach"},
        "watts_strogatz": {"n", "k", "beta"},
        "complete": {"n"},
        "cycle": {"n"},
        "path": {"n"},
        "star": {"n"},
        "gnp": {"n", "p"},
    }[spec.family]
    for key in params:
        if key not in known:
            raise InvalidParamsError(key, f"unknown parameter for family {spec.family!r}")

    if spec.family == "rmat":
        scale = _require_int(params, "scale", minimum=1, maximum=30)
        edge_factor = int(params.get("edge_factor", RMAT_DEFAULT_EDGE_FACTOR))
        probs = tuple(
            float(params.get(key, default))
            for key, default in zip("abcd", RMAT_DEFAULT_PROBS)
        )
        return rmat(scale, edge_factor, probs=probs, seed=spec.seed)
    if spec.family == "barabasi_albert":
        return barabasi_albert(
            _require_int(params, "n", minimum=2),
            _require_int(params, "m_attach", minimum=1),
            seed=spec.seed,
        )
    if spec.family == "watts_strogatz":
        n = int(params.get("n", WS_DEFAULT_N))
        k = int(params.get("k", WS_DEFAULT_K))
        beta = float(params.get("beta", WS_DEFAULT_BETA))
        return watts_strogatz(n, k, beta, seed=spec.seed)
    if spec.family == "complete":
        return complete_graph(_require_int(params, "n", minimum=1))
    if spec.family == "cycle":
        return cycle_graph(_require_int(params, "n", minimum=3))
    if spec.family == "path":
        return path_graph(_require_int(params, "n", minimum=1))
    if spec.family == "star":
        return star_graph(_require_int(params, "n", minimum=2))
    return gnp(_require_int(params, "n", minimum=0), _require_prob(params, "p"), seed=spec.seed)


def complete_graph(n: int) -> EdgeArray:
    if n < 1:
        raise InvalidParamsError("n", f"must be >= 1, got {n}")
    iu = np.triu_indices(n, k=1)
    return edge_array_from_undirected(np.column_stack(iu))


def cycle_graph(n: int) -> EdgeArray:
    if n < 3:
        raise InvalidParamsError("n", f"must be >= 3, got {n}")
    ids = np.arange(n)
    pairs = np.column_stack([ids, (ids + 1) % n])
    return edge_array_from_undirected(np.sort(pairs, axis=1))


def path_graph(n: int) -> EdgeArray:
    if n < 1:
        raise InvalidParamsError("n", f"must be >= 1, got {n}")
    ids = np.arange(n - 1)
    return edge_array_from_undirected(np.column_stack([ids, ids + 1]))


def star_graph(n: int) -> EdgeArray:
    """Center 0 joined to leaves 1..n-1."""
    if n < 2:
        raise InvalidParamsError("n", f"must be >= 2, got {n}")
    leaves = np.arange(1, n)
    return edge_array_from_undirected(np.column_stack([np.zeros(n - 1, dtype=np.int64), leaves]))


def gnp(n: int, p: float, seed: int = 0) -> EdgeArray:
    """Erdős–Rényi G(n, p), sampled row by row to keep memory at O(n)."""
    if n < 0:
        raise InvalidParamsError("n", f"must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParamsError("p", f"must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    chunks = []
    for u in range(n - 1):
        hits = np.nonzero(rng.random(n - u - 1) < p)[0]
        if hits.size:
            chunks.append(np.column_stack([np.full(hits.size, u, dtype=np.int64), u + 1 + hits]))
    if not chunks:
        return EdgeArray([])
    return edge_array_from_undirected(np.concatenate(chunks))


def rmat(
    scale: int,
    edge_factor: int = RMAT_DEFAULT_EDGE_FACTOR,
    *,
    probs: tuple[float, float, float, float] = RMAT_DEFAULT_PROBS,
    seed: int = 0,
) -> EdgeArray:
    """Recursive-matrix (Kronecker) random graph on 2**scale vertices.

    Draws edges by descending the scale levels of a 2x2 quadrant split with
    probabilities (a, b, c, d); self-loops and duplicates are resampled
    until exactly ``edge_factor * 2**scale`` distinct undirected edges exist,
    keeping instance sizes reproducible.

    Parameters
    ----------
    scale : int
        log2 of the vertex count, 1..30.
    edge_factor : int
        Undirected edges per vertex in the final graph.
    probs : (a, b, c, d)
        Quadrant probabilities; must be nonnegative and sum to 1.
    seed : int
        RNG seed.
    """
    if not 1 <= scale <= 30:
        raise InvalidParamsError("scale", f"must be in 1..30, got {scale}")
    if edge_factor < 1:
        raise InvalidParamsError("edge_factor", f"must be >= 1, got {edge_factor}")
    a, b, c, d = (float(x) for x in probs)
    if min(a, b, c, d) < 0 or abs(a + b + c + d - 1.0) > 1e-9:
        raise InvalidParamsError("probs", f"must be nonnegative and sum to 1, got {probs}")

    n = 1 << scale
    target = edge_factor * n
    if target > n * (n - 1) // 2:
        raise InvalidParamsError("edge_factor", f"{target} edges do not fit in a simple graph on {n} vertices")

    rng = np.random.default_rng(seed)
    t_ab = a + b
    t_abc = a + b + c
    have = np.empty(0, dtype=np.uint64)
    stalled = 0
    while have.size < target:
        need = target - have.size
        batch = max(4096, int(need * 1.3))
        src = np.zeros(batch, dtype=np.int64)
        dst = np.zeros(batch, dtype=np.int64)
        for _ in range(scale):
            r = rng.random(batch)
            src_bit = r >= t_ab
            dst_bit = ((r >= a) & (r < t_ab)) | (r >= t_abc)
            src = (src << 1) | src_bit
            dst = (dst << 1) | dst_bit
        keep = src != dst
        lo = np.minimum(src[keep], dst[keep]).astype(np.uint64)
        hi = np.maximum(src[keep], dst[keep]).astype(np.uint64)
        keys = (lo << 32) | hi
        # order-preserving dedupe within the batch, then drop already-known keys
        _, first_idx = np.unique(keys, return_index=True)
        keys = keys[np.sort(first_idx)]
        if have.size:
            pos = np.searchsorted(have, keys)
            pos_clipped = np.minimum(pos, have.size - 1)
            known = have[pos_clipped] == keys
            keys = keys[~known]
        new = keys[:need]
        if new.size == 0:
            stalled += 1
            if stalled >= 25:
                raise RuntimeError(
                    f"rmat sampling saturated below the target of {target} edges "
                    f"(scale={scale}, edge_factor={edge_factor})"
                )
            continue
        stalled = 0
        have = np.sort(np.concatenate([have, new]))

    pairs = np.empty((target, 2), dtype=np.uint32)
    pairs[:, 0] = have >> 32
    pairs[:, 1] = have & np.uint64(0xFFFFFFFF)
    return edge_array_from_undirected(pairs)


def barabasi_albert(n: int, m_attach: int, seed: int = 0) -> EdgeArray:
    """Preferential attachment starting from a complete graph on m_attach vertices.

    Each vertex m_attach..n-1 attaches to m_attach distinct existing vertices
    chosen with probability proportional to degree, so the edge count is
    exactly C(m_attach, 2) + (n - m_attach) * m_attach.
    """
    if n < 2:
        raise InvalidParamsError("n", f"must be >= 2, got {n}")
    if not 1 <= m_attach < n:
        raise InvalidParamsError("m_attach", f"must satisfy 1 <= m_attach < n, got {m_attach}")
    rng = np.random.default_rng(seed)

    pairs: list[tuple[int, int]] = [
        (i, j) for i in range(m_attach) for j in range(i + 1, m_attach)
    ]
    repeated: list[int] = []
    for u, v in pairs:
        repeated.append(u)
        repeated.append(v)

    for new in range(m_attach, n):
        targets: set[int] = set()
        if not repeated:
            # only reachable with m_attach == 1 at the first step
            targets.add(int(rng.integers(0, new)))
        while len(targets) < m_attach:
            draws = rng.integers(0, len(repeated), size=m_attach - len(targets))
            for ix in draws:
                targets.add(repeated[int(ix)])
        for t in sorted(targets):
            pairs.append((t, new))
            repeated.append(t)
            repeated.append(new)

    return edge_array_from_undirected(np.asarray(pairs, dtype=np.int64))


def watts_strogatz(n: int, k: int, beta: float, seed: int = 0) -> EdgeArray:
    """Ring lattice with k nearest neighbors, each edge rewired with probability beta.

    Rewiring replaces (u, u+j) with (u, w) for a uniformly drawn w, skipping
    self-loops and duplicates; the edge count n*k/2 is preserved.
    """
    if n < 1:
        raise InvalidParamsError("n", f"must be >= 1, got {n}")
    if k % 2 != 0 or k < 0:
        raise InvalidParamsError("k", f"must be even and nonnegative, got {k}")
    if k >= n:
        raise InvalidParamsError("k", f"must be < n = {n}, got {k}")
    if not 0.0 <= beta <= 1.0:
        raise InvalidParamsError("beta", f"must be in [0, 1], got {beta}")

    rng = np.random.default_rng(seed)
    edges: set[tuple[int, int]] = set()
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            edges.add((u, v) if u < v else (v, u))

    for j in range(1, k // 2 + 1):
        rewire = rng.random(n) < beta
        for u in range(n):
            if not rewire[u]:
                continue
            v = (u + j) % n
            old = (u, v) if u < v else (v, u)
            for _ in range(4 * n):
                w = int(rng.integers(0, n))
                if w == u:
                    continue
                candidate = (u, w) if u < w else (w, u)
                if candidate not in edges:
                    edges.discard(old)
                    edges.add(candidate)
                    break

    if not edges:
        return EdgeArray([])
    return edge_array_from_undirected(np.asarray(sorted(edges), dtype=np.int64))
