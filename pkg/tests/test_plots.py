from __future__ import annotations

from tricount.bench import run_bench, write_report_files
from tricount.plots import render_bench_figures

from helpers import complete_pairs, edge_array

PNG_MAGIC = b"\x89PNG"


def test_figures_rendered(tmp_path):
    report = run_bench(edge_array(complete_pairs(6)), runs=3, workers=1, graph_name="k6")
    paths = render_bench_figures(report, tmp_path)
    assert [p.name for p in paths] == ["runs.png", "amdahl.png"]
    for p in paths:
        assert p.read_bytes()[:4] == PNG_MAGIC


def test_report_files_alongside_figures(tmp_path):
    report = run_bench(edge_array(complete_pairs(5)), runs=2, workers=1, graph_name="k5")
    written = write_report_files(report, tmp_path / "out")
    names = {p.name for p in written}
    assert names == {"bench.jsonl", "bench.csv", "runs.png", "amdahl.png"}
    for p in written:
        assert p.stat().st_size > 0
