"""Edge-list ingestion and serialization.

Text format: UTF-8 lines of "u v" (any whitespace); lines starting with
'#' or '%' are comments. SNAP-style files list each undirected edge once,
so the default read mode symmetrizes; ``strict`` expects every edge
pre-doubled (one line per direction) and ``normalize`` runs full cleanup.

Binary format (little-endian throughout, bit-exact):

    bytes 0..3   magic "TRI1"
    bytes 4..11  u64 number of directed (u, v) pairs
    then         pairs of u32, one (u, v) per directed entry

File length is exactly 12 + 8 * count bytes.
"""
from __future__ import annotations

import struct
from array import array
from pathlib import Path

import numpy as np

from .graph import (
    EdgeArray,
    normalize,
    pack_edge_keys,
    unpack_edge_keys,
    validate_edge_array,
)

MAGIC = b"TRI1"
_HEADER = struct.Struct("<4sQ")

READ_MODES = ("strict", "symmetrize", "normalize")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class BadMagicError(ValueError):
    pass


class TruncatedFileError(ValueError):
    pass


def read_edge_list(source, mode: str = "symmetrize") -> EdgeArray:
    """Parse a text edge list.

    Parameters
    ----------
    source : path or open text file
    mode : {"strict", "symmetrize", "normalize"}
        strict: every undirected edge must appear in both directions;
        file order is preserved.
        symmetrize: each line is one undirected edge; the reverse is added
        and the result is sorted lexicographically.
        normalize: drop self-loops and duplicates, add missing reverses.
    """
    if mode not in READ_MODES:
        raise ValueError(f"unknown mode {mode!r} (choose from {', '.join(READ_MODES)})")
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return read_edge_list(fh, mode)

    flat = array("I")
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected two fields, got {len(tokens)}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"not an integer pair: {line!r}") from None
        if u < 0 or v < 0 or u > 0xFFFFFFFF or v > 0xFFFFFFFF:
            raise ParseError(lineno, f"vertex id out of unsigned 32-bit range: {line!r}")
        flat.append(u)
        flat.append(v)

    pairs = np.frombuffer(flat, dtype=np.uint32).reshape(-1, 2).copy()
    if mode == "strict":
        return validate_edge_array(pairs)
    if mode == "symmetrize":
        doubled = np.concatenate([pairs, pairs[:, ::-1]]) if pairs.size else pairs
        g = validate_edge_array(doubled)
        return EdgeArray(unpack_edge_keys(np.sort(pack_edge_keys(g.edges))))
    return normalize(pairs)


def write_edge_list(g: EdgeArray, dest, both_directions: bool = False) -> None:
    """Write a text edge list.

    By default each undirected edge is written once as "u v" with u < v
    (read back with mode="symmetrize"); with ``both_directions`` every
    directed pair is written (read back with mode="strict").
    """
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8") as fh:
            write_edge_list(g, fh, both_directions)
            return
    if both_directions:
        rows = g.edges
    else:
        rows = g.edges[g.edges[:, 0] < g.edges[:, 1]]
    dest.writelines(f"{u} {v}\n" for u, v in rows.tolist())


def adjacency_to_edge_array(adj) -> EdgeArray:
    """Single-pass conversion from per-vertex neighbor lists.

    ``adj`` may be a sequence indexed by vertex or a mapping vertex -> list.
    The lists must be symmetric; validation reports the first offending edge.
    """
    items = adj.items() if hasattr(adj, "items") else enumerate(adj)
    pairs = [(u, v) for u, neighbors in items for v in neighbors]
    return validate_edge_array(pairs)


def write_binary(g: EdgeArray, dest) -> None:
    """Serialize to the TRI1 binary format (fast reload; round trips bit-exactly)."""
    if isinstance(dest, (str, Path)):
        with open(dest, "wb") as fh:
            write_binary(g, fh)
            return
    dest.write(_HEADER.pack(MAGIC, g.edges.shape[0]))
    dest.write(np.ascontiguousarray(g.edges, dtype="<u4").tobytes())


def read_binary(source) -> EdgeArray:
    """Deserialize a TRI1 file written by :func:`write_binary`."""
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            return read_binary(fh)
    data = source.read()
    if len(data) < _HEADER.size:
        raise TruncatedFileError(f"file shorter than the {_HEADER.size}-byte header")
    magic, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BadMagicError(f"expected magic {MAGIC!r}, got {magic!r}")
    expected = _HEADER.size + 8 * count
    if len(data) != expected:
        raise TruncatedFileError(f"expected {expected} bytes for {count} pairs, got {len(data)}")
    pairs = np.frombuffer(data, dtype="<u4", offset=_HEADER.size).reshape(-1, 2)
    return EdgeArray(pairs)


def sniff_format(path) -> str:
    """Guess "binary" or "text" from the magic bytes."""
    with open(path, "rb") as fh:
        return "binary" if fh.read(4) == MAGIC else "text"


def load_graph(path, fmt: str = "auto", mode: str = "symmetrize") -> EdgeArray:
    """Read a graph in either format; binary contents are validated per ``mode``.

    For binary input, ``strict``/``symmetrize`` both validate the stored
    pairs as-is (the format already holds both directions); ``normalize``
    runs cleanup.
    """
    if fmt == "auto":
        fmt = sniff_format(path)
    if fmt == "text":
        return read_edge_list(path, mode)
    if fmt == "binary":
        g = read_binary(path)
        return normalize(g.edges) if mode == "normalize" else validate_edge_array(g.edges)
    raise ValueError(f"unknown format {fmt!r}")
