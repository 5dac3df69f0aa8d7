"""Benchmark harness: warmed, repeated timed runs with a stability check.

Protocol: one untimed warm-up run (which also absorbs JIT compilation),
then N timed runs of preprocess + count; the report carries per-run phase
times, their mean, the relative standard deviation (flagged above 0.05),
and the serial-fraction projection of the best multi-pool speedup.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .count import PhaseTimings, count_with_timings, default_workers
from .graph import EdgeArray, degrees_of
from .metrics import transitivity, wedge_count

RSD_LIMIT = 0.05
DEFAULT_RUNS = 5


def amdahl_max_speedup(serial_fraction: float, pools: int) -> float:
    """Best possible speedup at ``pools`` parallel units given the serial fraction."""
    return 1.0 / (serial_fraction + (1.0 - serial_fraction) / pools)


@dataclass
class BenchReport:
    graph: str
    num_vertices: int
    num_edges: int  # undirected
    triangles: int
    transitivity: float
    workers: int
    pools: int
    runs: list[PhaseTimings]

    @property
    def totals_ms(self) -> list[float]:
        return [r.total_ms for r in self.runs]

    @property
    def mean_total_ms(self) -> float:
        return sum(self.totals_ms) / len(self.runs)

    @property
    def mean_preprocess_ms(self) -> float:
        return sum(r.preprocess_ms for r in self.runs) / len(self.runs)

    @property
    def mean_count_ms(self) -> float:
        return sum(r.count_ms for r in self.runs) / len(self.runs)

    @property
    def rsd(self) -> float:
        """Population standard deviation of run totals, relative to the mean."""
        mean = self.mean_total_ms
        if mean <= 0:
            return 0.0
        var = sum((t - mean) ** 2 for t in self.totals_ms) / len(self.runs)
        return math.sqrt(var) / mean

    @property
    def rsd_ok(self) -> bool:
        return self.rsd <= RSD_LIMIT

    @property
    def amdahl_fraction(self) -> float:
        """Fraction of phase time spent in the serial preprocessing phase."""
        phases = self.mean_preprocess_ms + self.mean_count_ms
        if phases <= 0:
            return 0.0
        return self.mean_preprocess_ms / phases

    def run_records(self) -> list[dict]:
        """One JSON-ready object per timed run (the JSON-lines schema)."""
        return [
            {
                "graph": self.graph,
                "run": i + 1,
                "runs": len(self.runs),
                "vertices": self.num_vertices,
                "edges": self.num_edges,
                "triangles": self.triangles,
                "workers": self.workers,
                "pools": self.pools,
                "preprocess_ms": r.preprocess_ms,
                "count_ms": r.count_ms,
                "total_ms": r.total_ms,
            }
            for i, r in enumerate(self.runs)
        ]


def run_bench(
    g: EdgeArray,
    runs: int = DEFAULT_RUNS,
    workers: int | None = None,
    pools: int = 1,
    graph_name: str = "graph",
) -> BenchReport:
    """Benchmark preprocess + count on one graph.

    Timing starts at edge-array handoff; file parsing never appears in the
    numbers. The triangle count must agree across runs (it always does; a
    mismatch raises).
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    workers = default_workers() if workers is None else workers

    triangles, _ = count_with_timings(g, workers, pools=pools)  # warm-up, untimed
    timings: list[PhaseTimings] = []
    for _ in range(runs):
        t, pt = count_with_timings(g, workers, pools=pools)
        if t != triangles:
            raise RuntimeError(f"count changed between runs: {triangles} vs {t}")
        timings.append(pt)

    wedges = wedge_count(degrees_of(g))
    return BenchReport(
        graph=graph_name,
        num_vertices=g.num_vertices,
        num_edges=g.num_undirected_edges,
        triangles=triangles,
        transitivity=transitivity(triangles, wedges),
        workers=workers,
        pools=pools,
        runs=timings,
    )


def format_table(report: BenchReport) -> str:
    """Human-readable summary with per-run rows, stability flag, and projection."""
    lines = [
        f"graph {report.graph}: {report.num_vertices} vertices, "
        f"{report.num_edges} undirected edges, {report.triangles} triangles, "
        f"transitivity {report.transitivity:.6f}",
        f"workers={report.workers} pools={report.pools} runs={len(report.runs)}",
        f"{'run':>4} {'preprocess_ms':>14} {'count_ms':>12} {'total_ms':>12}",
    ]
    for i, r in enumerate(report.runs, start=1):
        lines.append(f"{i:>4} {r.preprocess_ms:>14.3f} {r.count_ms:>12.3f} {r.total_ms:>12.3f}")
    flag = "ok" if report.rsd_ok else f"FLAGGED (> {RSD_LIMIT})"
    lines.append(
        f"mean {report.mean_preprocess_ms:>14.3f} {report.mean_count_ms:>12.3f} "
        f"{report.mean_total_ms:>12.3f}"
    )
    lines.append(f"relative std dev (sigma/mean): {report.rsd:.4f} [{flag}]")
    f = report.amdahl_fraction
    lines.append(
        f"preprocessing fraction f={f:.3f}; "
        f"projected max speedup: {amdahl_max_speedup(f, 2):.2f}x at 2 pools, "
        f"{amdahl_max_speedup(f, 4):.2f}x at 4 pools"
    )
    return "\n".join(lines)


def summary_record(report: BenchReport) -> str:
    """The stable key=value line printed after the table."""
    return (
        f"graph={report.graph} vertices={report.num_vertices} edges={report.num_edges} "
        f"triangles={report.triangles} transitivity={report.transitivity:.6f} "
        f"runs={len(report.runs)} workers={report.workers} pools={report.pools} "
        f"mean_preprocess_ms={report.mean_preprocess_ms:.3f} "
        f"mean_count_ms={report.mean_count_ms:.3f} mean_total_ms={report.mean_total_ms:.3f} "
        f"rsd={report.rsd:.4f} rsd_ok={report.rsd_ok} "
        f"amdahl_fraction={report.amdahl_fraction:.4f} "
        f"amdahl_max_speedup_4pool={amdahl_max_speedup(report.amdahl_fraction, 4):.3f}"
    )


def write_jsonl(report: BenchReport, path, append: bool = True) -> None:
    mode = "a" if append else "w"
    with open(path, mode, encoding="utf-8") as fh:
        for record in report.run_records():
            fh.write(json.dumps(record) + "\n")


def write_csv(report: BenchReport, path) -> None:
    records = report.run_records()
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(records[0].keys()))
        writer.writeheader()
        writer.writerows(records)


def write_report_files(report: BenchReport, out_dir, figures: bool = True) -> list[Path]:
    """Write bench.jsonl, bench.csv, and the rendered figures into a directory."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    jsonl = out / "bench.jsonl"
    write_jsonl(report, jsonl, append=False)
    csv_path = out / "bench.csv"
    write_csv(report, csv_path)
    written = [jsonl, csv_path]
    if figures:
        from .plots import render_bench_figures

        written.extend(render_bench_figures(report, out))
    return written
