from __future__ import annotations

import json
import re
from pathlib import Path

import pytest

from tricount.cli import main
from tricount.io import read_edge_list
from tricount.oracle import sequential_forward_count

K5 = str(Path(__file__).parent / "data" / "k5.txt")


def _last_line(capsys) -> str:
    return capsys.readouterr().out.strip().splitlines()[-1]


def _record(line: str) -> dict:
    return dict(field.split("=", 1) for field in line.split())


class TestCount:
    def test_bundled_k5(self, capsys):
        assert main(["count", K5, "--workers", "2"]) == 0
        record = _record(_last_line(capsys))
        assert record["triangles"] == "10"
        assert record["vertices"] == "5"
        assert record["edges"] == "10"
        assert record["transitivity"] == "1.000000"

    def test_worker_invariance(self, capsys):
        main(["count", K5, "--workers", "1"])
        one = _record(_last_line(capsys))["triangles"]
        main(["count", K5, "--workers", "8"])
        eight = _record(_last_line(capsys))["triangles"]
        assert one == eight == "10"

    def test_pools(self, capsys):
        assert main(["count", K5, "--workers", "2", "--pools", "3"]) == 0
        assert _record(_last_line(capsys))["triangles"] == "10"

    def test_env_var_worker_default(self, capsys, monkeypatch):
        monkeypatch.setenv("TRICOUNT_WORKERS", "3")
        main(["count", K5])
        assert _record(_last_line(capsys))["workers"] == "3"

    def test_data_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("0 x\n")
        assert main(["count", str(bad)]) == 1
        assert "error" in capsys.readouterr().err

    def test_missing_file_exit_code(self, capsys):
        assert main(["count", "/no/such/file"]) == 1

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["count", K5, "--format", "excel"])
        assert exc.value.code == 2


class TestBench:
    def test_single_run(self, capsys):
        assert main(["bench", K5, "--runs", "1", "--workers", "1"]) == 0
        out = capsys.readouterr().out
        record = _record(out.strip().splitlines()[-1])
        assert record["rsd"] == "0.0000"
        assert record["runs"] == "1"
        assert record["triangles"] == "10"

    def test_protocol_output(self, capsys):
        assert main(["bench", K5, "--runs", "5", "--workers", "2"]) == 0
        out = capsys.readouterr().out
        assert len(re.findall(r"^\s+\d+\s+[\d.]+\s+[\d.]+\s+[\d.]+$", out, re.M)) == 5
        assert "relative std dev" in out
        assert "preprocessing fraction" in out
        assert "4 pools" in out

    def test_jsonl_and_report_dir(self, tmp_path, capsys):
        log = tmp_path / "runs.jsonl"
        report_dir = tmp_path / "report"
        assert main([
            "bench", K5, "--runs", "2", "--workers", "1",
            "--jsonl", str(log), "--report-dir", str(report_dir),
        ]) == 0
        assert len(log.read_text().splitlines()) == 2
        assert json.loads(log.read_text().splitlines()[0])["triangles"] == 10
        for name in ("bench.jsonl", "bench.csv", "runs.png", "amdahl.png"):
            assert (report_dir / name).stat().st_size > 0


class TestGenerate:
    def test_deterministic_files(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        for out in (a, b):
            assert main([
                "generate", "--family", "rmat", "--scale", "6", "--edge-factor", "4",
                "--seed", "7", "--out", str(out),
            ]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_complete_counts_downstream(self, tmp_path, capsys):
        out = tmp_path / "k5gen.txt"
        main(["generate", "--family", "complete", "--n", "5", "--out", str(out)])
        main(["count", str(out)])
        assert _record(_last_line(capsys))["triangles"] == "10"

    def test_ws_matches_sequential_oracle(self, tmp_path, capsys):
        out = tmp_path / "ws.txt"
        main([
            "generate", "--family", "ws", "--n", "1000", "--k", "10",
            "--beta", "0.1", "--seed", "1", "--out", str(out),
        ])
        main(["count", str(out), "--workers", "4"])
        engine = int(_record(_last_line(capsys))["triangles"])
        assert engine == sequential_forward_count(read_edge_list(out))

    def test_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "spec.cfg"
        cfg.write_text("family=gnp\nn=40\np=0.2\nseed=3\n")
        out1, out2 = tmp_path / "c1.txt", tmp_path / "c2.txt"
        assert main(["generate", "--config", str(cfg), "--out", str(out1)]) == 0
        assert main([
            "generate", "--family", "gnp", "--n", "40", "--p", "0.2", "--seed", "3",
            "--out", str(out2),
        ]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_family_alias(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        main(["generate", "--family", "ba", "--n", "30", "--m-attach", "2",
              "--seed", "5", "--out", str(a)])
        main(["generate", "--family", "barabasi_albert", "--n", "30", "--m-attach", "2",
              "--seed", "5", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_binary_output(self, tmp_path, capsys):
        out = tmp_path / "g.bin"
        main(["generate", "--family", "complete", "--n", "4", "--format", "binary",
              "--out", str(out)])
        main(["count", str(out)])
        assert _record(_last_line(capsys))["triangles"] == "4"

    def test_invalid_params_exit_code(self, tmp_path, capsys):
        assert main(["generate", "--family", "gnp", "--n", "5", "--p", "2.0",
                     "--out", str(tmp_path / "x.txt")]) == 1

    def test_family_or_config_required(self, tmp_path, capsys):
        assert main(["generate", "--out", str(tmp_path / "x.txt")]) == 2


class TestConvert:
    def test_text_binary_text_round_trip(self, tmp_path, capsys):
        binary = tmp_path / "k5.bin"
        text = tmp_path / "k5back.txt"
        assert main(["convert", K5, "--to", "binary", "--out", str(binary)]) == 0
        assert "convert_ms" in _last_line(capsys)
        assert main(["convert", str(binary), "--to", "text", "--out", str(text)]) == 0
        assert read_edge_list(text) == read_edge_list(K5)

    def test_bad_format_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["convert", K5, "--to", "parquet", "--out", str(tmp_path / "x")])
        assert exc.value.code == 2
