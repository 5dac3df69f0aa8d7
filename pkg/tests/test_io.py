from __future__ import annotations

import io as std_io
import struct

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tricount.graph import (
    AsymmetricEdgeError,
    DuplicateEdgeError,
    EdgeArray,
    SelfLoopError,
    normalize,
)
from tricount.io import (
    MAGIC,
    BadMagicError,
    ParseError,
    TruncatedFileError,
    adjacency_to_edge_array,
    load_graph,
    read_binary,
    read_edge_list,
    sniff_format,
    write_binary,
    write_edge_list,
)

from helpers import complete_pairs, edge_array


def _text(content: str):
    return std_io.StringIO(content)


class TestReadEdgeList:
    def test_strict(self):
        g = read_edge_list(_text("0 1\n1 0\n"), mode="strict")
        assert g.num_undirected_edges == 1

    def test_symmetrize_with_comment(self):
        g = read_edge_list(_text("# c\n0 1\n"), mode="symmetrize")
        assert g == read_edge_list(_text("0 1\n1 0\n"), mode="strict")

    def test_percent_comments_and_blank_lines(self):
        g = read_edge_list(_text("% header\n\n0 1\n\n"), mode="symmetrize")
        assert g.num_undirected_edges == 1

    def test_parse_error_line_number(self):
        with pytest.raises(ParseError) as exc:
            read_edge_list(_text("0 x\n"))
        assert exc.value.line == 1
        with pytest.raises(ParseError) as exc:
            read_edge_list(_text("# ok\n0 1\n0 1 2\n"))
        assert exc.value.line == 3

    def test_id_out_of_range(self):
        with pytest.raises(ParseError):
            read_edge_list(_text(f"0 {2**32}\n"))
        with pytest.raises(ParseError):
            read_edge_list(_text("-1 0\n"))

    def test_strict_catches_missing_reverse(self):
        with pytest.raises(AsymmetricEdgeError):
            read_edge_list(_text("0 1\n"), mode="strict")

    def test_symmetrize_catches_predoubled_input(self):
        with pytest.raises(DuplicateEdgeError):
            read_edge_list(_text("0 1\n1 0\n"), mode="symmetrize")

    def test_symmetrize_catches_self_loop(self):
        with pytest.raises(SelfLoopError):
            read_edge_list(_text("2 2\n"), mode="symmetrize")

    def test_normalize_cleans_everything(self):
        g = read_edge_list(_text("2 2\n0 1\n0 1\n1 0\n"), mode="normalize")
        assert g.pairs() == [(0, 1), (1, 0)]

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            read_edge_list(_text("0 1\n"), mode="fix")


class TestWriteEdgeList:
    def test_round_trip_symmetrize(self, tmp_path):
        g = edge_array(complete_pairs(5))
        path = tmp_path / "g.txt"
        write_edge_list(g, path)
        assert read_edge_list(path) == g

    def test_round_trip_strict(self, tmp_path):
        g = edge_array([(0, 3), (1, 2)])
        path = tmp_path / "g.txt"
        write_edge_list(g, path, both_directions=True)
        assert read_edge_list(path, mode="strict") == g

    @given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), max_size=60))
    def test_round_trip_property(self, raw):
        g = normalize(raw)
        buf = std_io.StringIO()
        write_edge_list(g, buf)
        buf.seek(0)
        assert read_edge_list(buf) == g


class TestAdjacency:
    def test_single_edge(self):
        g = adjacency_to_edge_array({0: [1], 1: [0]})
        assert g.pairs() == [(0, 1), (1, 0)]

    def test_k3_as_sequence(self):
        g = adjacency_to_edge_array([[1, 2], [0, 2], [0, 1]])
        assert g == edge_array(complete_pairs(3))

    def test_asymmetric_rejected(self):
        with pytest.raises(AsymmetricEdgeError) as exc:
            adjacency_to_edge_array({0: [1], 1: []})
        assert (exc.value.u, exc.value.v) == (0, 1)


class TestBinary:
    def test_golden_layout_k3(self):
        g = edge_array(complete_pairs(3))
        buf = std_io.BytesIO()
        write_binary(g, buf)
        expected = b"TRI1" + struct.pack("<Q", 6)
        for u, v in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]:
            expected += struct.pack("<II", u, v)
        assert buf.getvalue() == expected
        assert len(buf.getvalue()) == 12 + 8 * 6

    def test_round_trip(self, tmp_path):
        g = edge_array(complete_pairs(3))
        path = tmp_path / "g.bin"
        write_binary(g, path)
        assert read_binary(path) == g

    def test_empty_round_trip(self):
        buf = std_io.BytesIO()
        write_binary(EdgeArray([]), buf)
        assert len(buf.getvalue()) == 12
        buf.seek(0)
        assert read_binary(buf) == EdgeArray([])

    def test_bad_magic(self):
        with pytest.raises(BadMagicError):
            read_binary(std_io.BytesIO(b"NOPE" + struct.pack("<Q", 0)))

    def test_truncated(self):
        with pytest.raises(TruncatedFileError):
            read_binary(std_io.BytesIO(MAGIC))
        with pytest.raises(TruncatedFileError):
            read_binary(std_io.BytesIO(MAGIC + struct.pack("<Q", 2) + b"\x00" * 8))

    def test_trailing_bytes_rejected(self):
        buf = std_io.BytesIO()
        write_binary(edge_array([(0, 1)]), buf)
        with pytest.raises(TruncatedFileError):
            read_binary(std_io.BytesIO(buf.getvalue() + b"\x00"))

    @given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), max_size=60))
    def test_round_trip_property(self, raw):
        g = normalize(raw)
        buf = std_io.BytesIO()
        write_binary(g, buf)
        buf.seek(0)
        assert read_binary(buf) == g


def test_binary_reload_speed_report(tmp_path):
    # informational: binary reload vs text parse on a ~1M-edge graph
    # (reported, not asserted; ratios vary with machine and load)
    import time

    from tricount.generators import rmat

    g = rmat(13, 122, seed=1)  # 8192 * 122 = 999,424 undirected edges
    text_path = tmp_path / "g.txt"
    bin_path = tmp_path / "g.bin"
    write_edge_list(g, text_path)
    write_binary(g, bin_path)

    t0 = time.perf_counter()
    from_text = read_edge_list(text_path)
    text_s = time.perf_counter() - t0
    t0 = time.perf_counter()
    from_bin = read_binary(bin_path)
    bin_s = time.perf_counter() - t0

    assert from_text == from_bin == g
    ratio = text_s / bin_s if bin_s > 0 else float("inf")
    print(f"\nbinary reload: {bin_s * 1e3:.0f} ms vs text parse {text_s * 1e3:.0f} ms "
          f"({ratio:.1f}x faster; soft target >= 5x)")


class TestLoadGraph:
    def test_sniffing(self, tmp_path):
        g = edge_array(complete_pairs(4))
        text_path = tmp_path / "g.txt"
        bin_path = tmp_path / "g.bin"
        write_edge_list(g, text_path)
        write_binary(g, bin_path)
        assert sniff_format(text_path) == "text"
        assert sniff_format(bin_path) == "binary"
        assert load_graph(text_path) == g
        assert load_graph(bin_path) == g

    def test_binary_validated_on_load(self, tmp_path):
        path = tmp_path / "bad.bin"
        with open(path, "wb") as fh:
            fh.write(MAGIC + struct.pack("<Q", 1) + struct.pack("<II", 0, 1))
        with pytest.raises(AsymmetricEdgeError):
            load_graph(path)
        assert load_graph(path, mode="normalize").num_undirected_edges == 1
