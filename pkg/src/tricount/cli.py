"""Command-line front door: count, bench, generate, convert.

Exit codes: 0 success, 1 data error (parse/validation), 2 usage error.
Each command prints a stable key=value record as its final stdout line;
the fields are documented in the README.
"""
from __future__ import annotations

import argparse
import os
import sys
import time

from . import io as gio
from .bench import DEFAULT_RUNS, format_table, run_bench, summary_record, write_jsonl, write_report_files
from .count import count_with_timings, default_workers, warm_kernel
from .generators import FAMILIES, GeneratorSpec, InvalidParamsError, generate
from .graph import GraphValidationError, degrees_of
from .metrics import transitivity, wedge_count

WORKERS_ENV = "TRICOUNT_WORKERS"

FAMILY_ALIASES = {"ba": "barabasi_albert", "ws": "watts_strogatz"}

DATA_ERRORS = (
    GraphValidationError,
    InvalidParamsError,
    gio.ParseError,
    gio.BadMagicError,
    gio.TruncatedFileError,
    OSError,
    ValueError,
    RuntimeError,
)


def _env_workers() -> int:
    value = os.environ.get(WORKERS_ENV)
    if value:
        try:
            return int(value)
        except ValueError:
            pass
    return default_workers()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricount",
        description="Triangle counting via degree-ordered edge orientation and "
        "per-edge adjacency intersections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count triangles in a graph file")
    p_count.add_argument("input", help="edge list file (text or TRI1 binary)")
    _add_io_flags(p_count)
    _add_run_flags(p_count)

    p_bench = sub.add_parser("bench", help="timed benchmark runs with a stability report")
    p_bench.add_argument("input", help="edge list file (text or TRI1 binary)")
    _add_io_flags(p_bench)
    _add_run_flags(p_bench)
    p_bench.add_argument("--runs", type=int, default=DEFAULT_RUNS,
                         help="number of timed runs after one warm-up (default 5)")
    p_bench.add_argument("--jsonl", metavar="PATH",
                         help="append one JSON object per run to this log")
    p_bench.add_argument("--report-dir", metavar="DIR",
                         help="write bench.jsonl, bench.csv, and PNG figures here")

    p_gen = sub.add_parser("generate", help="generate a synthetic graph file")
    p_gen.add_argument("--family", choices=FAMILIES + tuple(FAMILY_ALIASES),
                       help="graph family (ba/ws are short aliases)")
    p_gen.add_argument("--config", metavar="FILE",
                       help="key=value-per-line spec file (family=..., params, seed=...)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--n", type=int, help="vertex count (most families)")
    p_gen.add_argument("--p", type=float, help="edge probability (gnp)")
    p_gen.add_argument("--k", type=int, help="lattice neighbors (watts_strogatz)")
    p_gen.add_argument("--beta", type=float, help="rewiring probability (watts_strogatz)")
    p_gen.add_argument("--m-attach", type=int, help="edges per new vertex (barabasi_albert)")
    p_gen.add_argument("--scale", type=int, help="log2 vertex count (rmat)")
    p_gen.add_argument("--edge-factor", type=int, help="edges per vertex (rmat)")
    p_gen.add_argument("--a", type=float, help="rmat quadrant probability a")
    p_gen.add_argument("--b", type=float, help="rmat quadrant probability b")
    p_gen.add_argument("--c", type=float, help="rmat quadrant probability c")
    p_gen.add_argument("--d", type=float, help="rmat quadrant probability d")
    p_gen.add_argument("--out", required=True, help="output file")
    p_gen.add_argument("--format", choices=("text", "binary"), default="text")

    p_conv = sub.add_parser("convert", help="convert between text and binary formats")
    p_conv.add_argument("input")
    p_conv.add_argument("--from", dest="from_fmt", choices=("auto", "text", "binary"),
                        default="auto")
    p_conv.add_argument("--to", dest="to_fmt", choices=("text", "binary"), required=True)
    p_conv.add_argument("--out", required=True, help="output file")
    p_conv.add_argument("--mode", choices=gio.READ_MODES, default="symmetrize",
                        help="text read mode (default symmetrize)")
    return parser


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("auto", "text", "binary"), default="auto",
                   help="input format (default: sniff the magic bytes)")
    p.add_argument("--mode", choices=gio.READ_MODES, default="symmetrize",
                   help="edge list interpretation (default symmetrize: one line "
                   "per undirected edge)")


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=None,
                   help=f"workers per pool (default ${WORKERS_ENV} or CPU count)")
    p.add_argument("--pools", type=int, default=1,
                   help="independent contiguous edge partitions (default 1)")


def cmd_count(args) -> int:
    g = gio.load_graph(args.input, args.format, args.mode)
    workers = args.workers if args.workers is not None else _env_workers()
    warm_kernel()  # keep JIT compilation out of the measured phases
    triangles, timings = count_with_timings(g, workers, pools=args.pools)
    wedges = wedge_count(degrees_of(g))
    ratio = transitivity(triangles, wedges)
    print(
        f"{args.input}: {g.num_vertices} vertices, {g.num_undirected_edges} undirected edges; "
        f"{triangles} triangles, transitivity {ratio:.6f}"
    )
    print(
        f"phases: preprocess {timings.preprocess_ms:.3f} ms, count {timings.count_ms:.3f} ms "
        f"({workers} workers, {args.pools} pools; file parsing excluded)"
    )
    print(
        f"graph={args.input} vertices={g.num_vertices} edges={g.num_undirected_edges} "
        f"triangles={triangles} wedges={wedges} transitivity={ratio:.6f} "
        f"preprocess_ms={timings.preprocess_ms:.3f} count_ms={timings.count_ms:.3f} "
        f"total_ms={timings.total_ms:.3f} workers={workers} pools={args.pools}"
    )
    return 0


def cmd_bench(args) -> int:
    if args.runs < 1:
        print("error: --runs must be >= 1", file=sys.stderr)
        return 2
    g = gio.load_graph(args.input, args.format, args.mode)
    workers = args.workers if args.workers is not None else _env_workers()
    report = run_bench(g, runs=args.runs, workers=workers, pools=args.pools,
                       graph_name=args.input)
    print(format_table(report))
    if args.jsonl:
        write_jsonl(report, args.jsonl, append=True)
    if args.report_dir:
        written = write_report_files(report, args.report_dir)
        print("wrote " + ", ".join(str(p) for p in written))
    print(summary_record(report))
    return 0


def cmd_generate(args) -> int:
    family = FAMILY_ALIASES.get(args.family, args.family)
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            spec = GeneratorSpec.from_config(fh.read())
        if family and family != spec.family:
            print("error: --family conflicts with the config file", file=sys.stderr)
            return 2
    else:
        if not family:
            print("error: provide --family or --config", file=sys.stderr)
            return 2
        flag_params = {
            "n": args.n, "p": args.p, "k": args.k, "beta": args.beta,
            "m_attach": args.m_attach, "scale": args.scale,
            "edge_factor": args.edge_factor,
            "a": args.a, "b": args.b, "c": args.c, "d": args.d,
        }
        params = {k: v for k, v in flag_params.items() if v is not None}
        spec = GeneratorSpec(family=family, params=params, seed=args.seed)

    g = generate(spec)
    if args.format == "binary":
        gio.write_binary(g, args.out)
    else:
        gio.write_edge_list(g, args.out)
    print(
        f"family={spec.family} seed={spec.seed} vertices={g.num_vertices} "
        f"edges={g.num_undirected_edges} out={args.out} format={args.format}"
    )
    return 0


def cmd_convert(args) -> int:
    t0 = time.perf_counter()
    g = gio.load_graph(args.input, args.from_fmt, args.mode)
    if args.to_fmt == "binary":
        gio.write_binary(g, args.out)
    else:
        gio.write_edge_list(g, args.out)
    elapsed_ms = (time.perf_counter() - t0) * 1e3
    print(f"converted {args.input} -> {args.out} in {elapsed_ms:.1f} ms")
    print(
        f"input={args.input} output={args.out} to={args.to_fmt} "
        f"vertices={g.num_vertices} edges={g.num_undirected_edges} "
        f"convert_ms={elapsed_ms:.3f}"
    )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "count": cmd_count,
        "bench": cmd_bench,
        "generate": cmd_generate,
        "convert": cmd_convert,
    }[args.command]
    try:
        return handler(args)
    except DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
