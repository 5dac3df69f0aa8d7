"""Figure rendering for bench reports (file output only, Agg backend)."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .bench import BenchReport, amdahl_max_speedup


def render_bench_figures(report: BenchReport, out_dir) -> list[Path]:
    """Render the per-run phase breakdown and the pool-scaling projection.

    Returns the paths of the written PNG files.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return [_runs_figure(report, out / "runs.png"), _amdahl_figure(report, out / "amdahl.png")]


def _runs_figure(report: BenchReport, path: Path) -> Path:
    runs = np.arange(1, len(report.runs) + 1)
    pre = np.array([r.preprocess_ms for r in report.runs])
    cnt = np.array([r.count_ms for r in report.runs])

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar(runs, pre, label="preprocess", color="#4878cf")
    ax.bar(runs, cnt, bottom=pre, label="count", color="#ee854a")
    ax.axhline(report.mean_total_ms, color="k", linestyle="--", linewidth=1,
               label=f"mean total ({report.mean_total_ms:.1f} ms)")
    ax.set_xlabel("run")
    ax.set_ylabel("time [ms]")
    ax.set_xticks(runs)
    ax.set_title(f"{report.graph}: per-run phase times "
                 f"(workers={report.workers}, pools={report.pools})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _amdahl_figure(report: BenchReport, path: Path) -> Path:
    f = report.amdahl_fraction
    pools = np.arange(1, 9)
    speedups = [amdahl_max_speedup(f, int(p)) for p in pools]

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(pools, speedups, marker="o", color="#4878cf")
    ax.annotate(f"{speedups[3]:.2f}x", (4, speedups[3]),
                textcoords="offset points", xytext=(6, -10))
    ax.set_xlabel("pools")
    ax.set_ylabel("projected max speedup")
    ax.set_title(f"{report.graph}: pool-scaling bound (serial fraction f={f:.3f})")
    ax.set_xticks(pools)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
